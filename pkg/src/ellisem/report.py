"""Full analysis pipeline and report rendering (JSON dict / plain text)."""

from __future__ import annotations

import json

from .analysis import classify_system, full_model_report, materialisable_kernel_model
from .errors import PreconditionError
from .fiber import build_fiber_semigroup
from .fixedpoint import FixedPoint
from .semigroup import kernel
from .substitution import Substitution, fixed_point_seeds


def _pair_dict(p):
    d = {
        "pair": list(p.pair),
        "direction": p.direction,
        "verdict": p.verdict,
        "proximal": p.proximal,
        "asymptotic": p.asymptotic,
        "recurrent_pairs": [list(t) for t in p.recurrent_pairs],
    }
    if p.threshold is not None:
        d["agreement_threshold"] = p.threshold
    if p.witnesses:
        d["witnesses"] = [list(w) for w in p.witnesses]
    return d


def analyze(
    subst: Substitution,
    depth: int = 8,
    witness_count: int = 5,
    horizon: int | None = None,
) -> dict:
    """Run the whole pipeline; returns a JSON-serialisable report."""
    seeds = fixed_point_seeds(subst)
    if not seeds:
        raise PreconditionError(
            "substitution has no fixed-point seeds; only the raw semigroup "
            "toolkit applies"
        )
    fib = build_fiber_semigroup(subst)
    classification = classify_system(subst, witness_count, horizon, fib=fib)

    model, reason = materialisable_kernel_model(subst, depth, fib)
    if model is None:
        model_info = {"declined": reason}
    else:
        model_info = {
            "left_zero_labels": list(model.labels),
            "odometer": {"base": model.base_length, "depth": model.depth},
            "size": len(model.product),
            "completely_simple": model.report.is_completely_simple,
            "rees": {
                "group_order": len(model.rees.data.group),
                "i_size": model.rees.data.i_size,
                "lambda_size": model.rees.data.lambda_size,
            },
        }
        if model.depth != depth:
            model_info["note"] = (
                f"materialised at depth {model.depth} (depth {depth} exceeds "
                "the table cap); strata offsets still use the requested depth"
            )

    base = fib.base
    ker = sorted(kernel(base).kernel)
    windows = {
        s: [FixedPoint(subst, s).rendered(k) for k in (1, 2)] for s in seeds
    }
    strata = full_model_report(subst, depth, fib=fib, classification=classification)

    return {
        "substitution": {
            "alphabet": list(subst.alphabet),
            "rules": {a: "".join(w) for a, w in zip(subst.alphabet, subst.rules)},
            "length": subst.length,
            "primitive": subst.is_primitive,
            "bijective": subst.is_bijective,
        },
        "seeds": list(seeds),
        "windows": windows,
        "pairs": [_pair_dict(p) for p in classification.pairs],
        "fiber_semigroup": {
            "elements": list(fib.words()),
            "cayley": [list(row) for row in base.table],
            "identity": fib.identity_index,
            "idempotents": sorted(base.idempotents),
            "kernel": ker,
            "forward": list(fib.forward),
            "backward": list(fib.backward),
            "non_regular": [fib.word(i) for i in classification.fiber_report.non_regular],
        },
        "classification": {
            "forward_almost_distal": classification.forward_almost_distal,
            "backward_almost_distal": classification.backward_almost_distal,
            "predicted_nearly_simple": classification.predicted_nearly_simple,
            "predicted_completely_regular": classification.predicted_completely_regular,
            "fiber_completely_regular": classification.fiber_report.is_completely_regular,
            "fiber_nearly_simple": classification.fiber_report.is_nearly_simple,
            "proximal_pairs": [list(p) for p in classification.proximal_pairs],
            "proximality_transitive_on_pairs": classification.proximality_transitive,
            "forward_proximality_transitive": classification.forward_proximality_transitive,
            "backward_proximality_transitive": classification.backward_proximality_transitive,
            "minimal_left_ideal_prediction": classification.minimal_left_ideal_prediction,
            "directional_kernels_equal": classification.directional_kernels_equal,
            "non_regular_witness": classification.non_regular_witness,
            "li_yorke_visible_in_shadow": classification.li_yorke_visible_in_shadow,
        },
        "kernel_model": model_info,
        "strata": strata,
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_text(report: dict) -> str:
    sub = report["substitution"]
    cls = report["classification"]
    lines = []
    out = lines.append
    out("substitution on {" + " ".join(sub["alphabet"]) + f"}} of length {sub['length']}")
    for a in sub["alphabet"]:
        out(f"  {a} -> {sub['rules'][a]}")
    out(f"primitive: {sub['primitive']}   bijective: {sub['bijective']}")
    out("")
    out("fixed-point seeds: " + " ".join(report["seeds"]))
    for s in report["seeds"]:
        out(f"  seed {s}: " + "  ".join(report["windows"][s]))
    out("")
    fib = report["fiber_semigroup"]
    out(f"fiber semigroup: {len(fib['elements'])} elements (image words over the seeds)")
    out("  elements: " + " ".join(fib["elements"]))
    out("  idempotents: " + " ".join(fib["elements"][i] for i in fib["idempotents"]))
    out("  kernel: " + " ".join(fib["elements"][i] for i in fib["kernel"]))
    out("  forward shadow: " + " ".join(fib["elements"][i] for i in fib["forward"]))
    out("  backward shadow: " + " ".join(fib["elements"][i] for i in fib["backward"]))
    if fib["non_regular"]:
        out("  not completely regular: " + " ".join(fib["non_regular"]))
    else:
        out("  every element is completely regular")
    out("")
    out("pair verdicts:")
    for p in report["pairs"]:
        extra = ""
        if "witnesses" in p:
            extra = "  witnesses " + " ".join(
                f"(n={n},N={nn})" for n, nn in p["witnesses"]
            )
        if "agreement_threshold" in p:
            extra = f"  agreement threshold {p['agreement_threshold']}"
        out(f"  ({p['pair'][0]},{p['pair'][1]}) {p['direction']}: {p['verdict']}{extra}")
    out("")
    out(f"forward almost distal: {cls['forward_almost_distal']}")
    out(f"backward almost distal: {cls['backward_almost_distal']}")
    if cls["predicted_completely_regular"]:
        out("verdict: almost distal; nearly simple predicted; fiber semigroup "
            "completely regular")
    elif cls["li_yorke_visible_in_shadow"]:
        out("verdict: not completely regular; witness "
            + str(cls["non_regular_witness"]))
    else:
        out("verdict: not completely regular (Li-Yorke pair present), but the "
            "separating element does not preserve the distinguished fiber: "
            "the fiber shadow itself is completely regular")
    out(f"proximality transitive on computed pairs: {cls['proximality_transitive_on_pairs']}")
    if cls["minimal_left_ideal_prediction"] is not None:
        out(
            "minimal left ideal count predicted (on computed pairs): "
            + str(cls["minimal_left_ideal_prediction"])
        )
    out(f"directional kernels equal: {cls['directional_kernels_equal']}")
    out("")
    km = report["kernel_model"]
    if "declined" in km:
        out("kernel model: declined — " + km["declined"])
    else:
        out(
            f"kernel model: {km['size']} elements = LZ_{len(km['left_zero_labels'])}"
            f" x Z/{km['odometer']['base']}^{km['odometer']['depth']},"
            f" completely simple = {km['completely_simple']},"
            f" Rees (|G|={km['rees']['group_order']},"
            f" |I|={km['rees']['i_size']}, |Lambda|={km['rees']['lambda_size']})"
        )
    out("")
    strata = report["strata"]
    out(f"strata ({strata['stratum_count']}):")
    for st in strata["strata"]:
        if st["name"] == "shift_powers":
            out("  - shift powers: " + st["description"])
        elif st["name"] == "kernel":
            detail = (
                "product model "
                f"LZ_{len(st['model']['left_zero_labels'])} x Z/"
                f"{st['model']['odometer']['base']}^{st['model']['odometer']['depth']}"
                if st.get("model")
                else f"fiber kernel {st['fiber_kernel']} ({st.get('note')})"
            )
            out("  - kernel: " + detail)
        else:
            out(
                "  - intermediate: maps "
                + " ".join(st["maps"])
                + f" x offsets mod {st['offset_modulus']}"
                + (
                    "; products fall into the kernel"
                    if st["products_fall_into_kernel"]
                    else "; products do NOT all fall into the kernel"
                )
            )
    if strata["minimality_note"]:
        out("")
        out("note: " + strata["minimality_note"])
    return "\n".join(lines) + "\n"
