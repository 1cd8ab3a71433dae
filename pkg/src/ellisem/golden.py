"""The golden worked-example suite: 14 exact assertions about the bundled
three-letter length-5 substitution, all checked with zero tolerance."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .analysis import classify_system, full_model_report, li_yorke_witness_map
from .errors import EllisemError
from .fiber import build_fiber_semigroup, kernel_model
from .fixedpoint import FixedPoint
from .pairs import BACKWARD, FORWARD, classify_pair
from .semigroup import (
    completely_regular_witness,
    idempotent_poset,
    kernel,
    structure_report,
)
from .substitution import Substitution, fixed_point_seeds, parse_substitution
from .transformation import compose


def load_bundled(name: str) -> Substitution:
    text = resources.files("ellisem.data").joinpath(f"{name}.sub").read_text()
    return parse_substitution(text)


WINDOWS_K1 = {"a": "a.acaa", "b": "a.bcaa", "c": "a.ccba"}
WINDOWS_K2 = {
    "a": "aacaaa.acaaaccbaaacaaaacaa",
    "b": "aacaaa.bcaaaccbaaacaaaacaa",
    "c": "aacaaa.ccbaaccbaabcaaaacaa",
}
FIBER_WORDS = {"aaa", "aab", "abc", "bbb", "ccc"}  # id = abc, phi = aab
PRODUCTS = [
    # (left, right, expected), image words over (a, b, c); fg = f o g
    ("aab", "aab", "aaa"),  # phi^2 = const_a
    ("aab", "aaa", "aaa"),  # phi const_a = const_a
    ("aaa", "aab", "aaa"),  # const_a phi = const_a
    ("aab", "bbb", "aaa"),  # phi const_b = const_a
    ("aab", "ccc", "bbb"),  # phi const_c = const_b
    ("bbb", "aab", "bbb"),  # const_b phi = const_b
    ("ccc", "aab", "ccc"),  # const_c phi = const_c
] + [
    (x, y, x)
    for x in ("aaa", "bbb", "ccc")
    for y in ("aaa", "bbb", "ccc")
]


@dataclass(frozen=True)
class GoldenResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name, ok, detail=""):
    return GoldenResult(name, bool(ok), "" if ok else detail)


def golden_checks(subst: Substitution | None = None, depth: int = 2):
    """Run all 14 golden assertions; returns a list of GoldenResult."""
    if subst is None:
        subst = load_bundled("paper")
    results = []

    def run(name, fn):
        try:
            results.append(fn(name))
        except Exception as exc:  # a crashed check is a failed check
            results.append(GoldenResult(name, False, f"raised {exc!r}"))

    def c01(name):
        seeds = fixed_point_seeds(subst)
        return _check(name, seeds == ("a", "b", "c"), f"seeds = {seeds}")

    def c02(name):
        got = {s: FixedPoint(subst, s).rendered(1) for s in fixed_point_seeds(subst)}
        return _check(name, got == WINDOWS_K1, f"windows(1) = {got}")

    def c03(name):
        got = {s: FixedPoint(subst, s).rendered(2) for s in fixed_point_seeds(subst)}
        return _check(name, got == WINDOWS_K2, f"windows(2) = {got}")

    def c04(name):
        fib = build_fiber_semigroup(subst)
        words = set(fib.words())
        return _check(
            name,
            words == FIBER_WORDS and fib.word(fib.identity_index) == "abc",
            f"fiber elements = {sorted(words)}",
        )

    def c05(name):
        fib = build_fiber_semigroup(subst)
        windex = {fib.word(i): i for i in range(len(fib.base))}
        bad = []
        for x, y, expected in PRODUCTS:
            got = fib.word(fib.base.table[windex[x]][windex[y]])
            if got != expected:
                bad.append(f"{x}*{y}={got}!={expected}")
        return _check(name, not bad, "; ".join(bad))

    def c06(name):
        fib = build_fiber_semigroup(subst)
        idem = {fib.word(i) for i in fib.base.idempotents}
        return _check(
            name, idem == {"abc", "aaa", "bbb", "ccc"}, f"idempotents = {sorted(idem)}"
        )

    def c07(name):
        fib = build_fiber_semigroup(subst)
        poset = idempotent_poset(fib.base)
        minimal = {fib.word(i) for i in poset.minimal}
        ker = {fib.word(i) for i in kernel(fib.base).kernel}
        constants = {"aaa", "bbb", "ccc"}
        lz = all(
            fib.base.table[i][j] == i
            for i in kernel(fib.base).kernel
            for j in kernel(fib.base).kernel
        )
        return _check(
            name,
            minimal == ker == constants and lz,
            f"minimal = {sorted(minimal)}, kernel = {sorted(ker)}, left_zero = {lz}",
        )

    def c08(name):
        fib = build_fiber_semigroup(subst)
        rep = structure_report(fib.base)
        non_regular = {fib.word(i) for i in rep.non_regular}
        idx = [i for i in range(len(fib.base)) if fib.word(i) == "aab"][0]
        t = fib.base.elements[idx]
        im = {fib.seeds[i] for i in t.image()}
        im2 = {fib.seeds[i] for i in compose(t, t).image()}
        return _check(
            name,
            non_regular == {"aab"} and im == {"a", "b"} and im2 == {"a"},
            f"non_regular = {sorted(non_regular)}, im = {sorted(im)}, im2 = {sorted(im2)}",
        )

    def c09(name):
        p = classify_pair(subst, "a", "b", FORWARD)
        return _check(name, p.verdict == "asymptotic", f"(a,b) forward = {p.verdict}")

    def c10(name):
        bad = []
        for pair in (("a", "c"), ("b", "c")):
            p = classify_pair(subst, *pair, FORWARD)
            if p.verdict != "li_yorke":
                bad.append(f"{pair} forward = {p.verdict}")
                continue
            x, y = (FixedPoint(subst, s) for s in pair)
            prev_n, prev_nn = 0, 0
            for (n, nn) in p.witnesses:
                ok = (
                    n > prev_n
                    and nn > prev_nn
                    and x[n] != y[n]
                    and all(x[m] == y[m] for m in range(n + 1, n + nn + 1))
                )
                if not ok:
                    bad.append(f"{pair} witness ({n},{nn}) invalid")
                prev_n, prev_nn = n, nn
            w = li_yorke_witness_map(subst, *pair)
            if w.map_word != "aab":
                bad.append(f"{pair} witness map = {w.map_word}")
        return _check(name, not bad, "; ".join(bad))

    def c11(name):
        bad = []
        for pair in (("a", "b"), ("a", "c"), ("b", "c")):
            p = classify_pair(subst, *pair, BACKWARD)
            if p.verdict != "asymptotic":
                bad.append(f"{pair} backward = {p.verdict}")
        return _check(name, not bad, "; ".join(bad))

    def c12(name):
        cls = classify_system(subst)
        ok = (
            cls.backward_almost_distal
            and not cls.forward_almost_distal
            and not cls.predicted_completely_regular
            and not cls.fiber_report.is_completely_regular
            and cls.non_regular_witness == "aab"
        )
        return _check(
            name,
            ok,
            f"bwd_ad={cls.backward_almost_distal} fwd_ad={cls.forward_almost_distal} "
            f"witness={cls.non_regular_witness}",
        )

    def c13(name):
        cls = classify_system(subst)
        fib = cls.fiber
        fwd = {fib.word(i) for i in fib.forward}
        bwd = {fib.word(i) for i in fib.backward}
        ok = (
            cls.proximality_transitive
            and cls.minimal_left_ideal_prediction == 1
            and cls.directional_kernels_equal
            and fwd == {"aaa", "bbb", "ccc", "aab"}
            and bwd == {"aaa", "bbb", "ccc"}
        )
        return _check(
            name,
            ok,
            f"prox_transitive={cls.proximality_transitive} "
            f"prediction={cls.minimal_left_ideal_prediction} "
            f"kernels_equal={cls.directional_kernels_equal} "
            f"forward={sorted(fwd)} backward={sorted(bwd)}",
        )

    def c14(name):
        model = kernel_model(subst, depth)
        d = model.rees.data
        ok = (
            len(model.product) == 3 * subst.length ** depth
            and model.report.is_completely_simple
            and len(d.group) == subst.length ** depth
            and d.i_size == 3
            and d.lambda_size == 1
        )
        return _check(
            name,
            ok,
            f"size={len(model.product)} |G|={len(d.group)} "
            f"|I|={d.i_size} |Lambda|={d.lambda_size}",
        )

    run("01 seeds are a b c", c01)
    run("02 one-step windows match the dot-anchored iteration", c02)
    run("03 two-step windows match the dot-anchored iteration", c03)
    run("04 fiber semigroup is {id, const_a, const_b, const_c, aab}", c04)
    run("05 full product table of the fiber semigroup", c05)
    run("06 idempotents are id and the three constants", c06)
    run("07 minimal idempotents = kernel = left-zero of 3 constants", c07)
    run("08 aab is the unique non-completely-regular element", c08)
    run("09 pair (a,b) is forward asymptotic", c09)
    run("10 pairs (a,c),(b,c) forward Li-Yorke with valid witnesses", c10)
    run("11 all pairs are backward asymptotic", c11)
    run("12 backward almost distal only; not completely regular", c12)
    run("13 proximality transitive; directional shadows and kernels", c13)
    run("14 kernel model at depth 2: 75 elements, Rees (Z/25, 3, 1)", c14)
    return results
