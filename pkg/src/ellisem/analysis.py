"""System-level classification: almost distality, near simplicity,
complete regularity, and the stratified model of the full Ellis semigroup.

Predictions made from pair verdicts are always cross-checked against the
algebra of the computed fiber semigroup; a disagreement raises
ConsistencyError and is never reconciled silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    ConsistencyError,
    KernelModelUnavailable,
    PreconditionError,
    ShadowBlindSpotError,
)
from .fiber import FiberSemigroup, KernelModel, build_fiber_semigroup, kernel_model
from .pairs import BACKWARD, FORWARD, PairClassification, classify_pair
from .semigroup import StructureReport, kernel, structure_report
from .substitution import Substitution, fixed_point_seeds
from .transformation import compose


@dataclass(frozen=True)
class ClassificationReport:
    seeds: tuple[str, ...]
    pairs: tuple[PairClassification, ...]  # both directions, all seed pairs
    forward_almost_distal: bool
    backward_almost_distal: bool
    predicted_nearly_simple: bool
    predicted_completely_regular: bool
    proximal_pairs: tuple[tuple[str, str], ...]  # proximal in some direction
    proximality_transitive: bool
    forward_proximality_transitive: bool
    backward_proximality_transitive: bool
    minimal_left_ideal_prediction: int | None  # per the two-ideal dichotomy
    directional_kernels_equal: bool
    fiber: FiberSemigroup
    fiber_report: StructureReport
    non_regular_witness: str | None  # image word of a non-CR fiber element
    # None when no Li-Yorke pair; False marks the shadow's blind spot (a
    # Li-Yorke pair whose separating element does not preserve the fiber).
    li_yorke_visible_in_shadow: bool | None

    def pair_result(self, s, s2, direction) -> PairClassification:
        for p in self.pairs:
            if set(p.pair) == {s, s2} and p.direction == direction:
                return p
        raise KeyError((s, s2, direction))


def _transitive(seeds, related) -> bool:
    """Transitivity of the reflexive-symmetric closure of `related`."""
    rel = {frozenset(p) for p in related}

    def prox(a, b):
        return a == b or frozenset((a, b)) in rel

    return all(
        not (prox(a, b) and prox(b, c)) or prox(a, c)
        for a in seeds
        for b in seeds
        for c in seeds
    )


def classify_system(
    subst: Substitution,
    witness_count: int = 5,
    horizon: int | None = None,
    fib: FiberSemigroup | None = None,
) -> ClassificationReport:
    seeds = fixed_point_seeds(subst)
    if not seeds:
        raise PreconditionError("substitution has no fixed-point seeds")
    if fib is None:
        fib = build_fiber_semigroup(subst)

    pairs = []
    for s, s2 in combinations(seeds, 2):
        for direction in (FORWARD, BACKWARD):
            pairs.append(
                classify_pair(subst, s, s2, direction, witness_count, horizon)
            )
    pairs = tuple(pairs)

    def of(direction):
        return [p for p in pairs if p.direction == direction]

    forward_ad = all(p.asymptotic or not p.proximal for p in of(FORWARD))
    backward_ad = all(p.asymptotic or not p.proximal for p in of(BACKWARD))
    predicted = forward_ad and backward_ad

    fiber_report = structure_report(fib.base)

    # One direction is a theorem of the shadow: a non-completely-regular
    # fiber element collapses a distinct seed pair whose members are
    # proximal but not asymptotic, so it forces a Li-Yorke pair; and an
    # almost distal verdict forces a completely regular, nearly simple
    # shadow.  The converse can genuinely fail: the separating element
    # promised by a Li-Yorke pair need not preserve the distinguished
    # fiber, so the shadow may stay completely regular.  That blind spot
    # is recorded (li_yorke_visible_in_shadow = False), never repaired.
    has_li_yorke = any(p.verdict == "li_yorke" for p in pairs)
    if predicted and not fiber_report.is_completely_regular:
        raise ConsistencyError(
            "almost distal on all pairs but the fiber shadow has a "
            "non-completely-regular element"
        )
    if predicted and fiber_report.is_nearly_simple is not True:
        raise ConsistencyError(
            "almost distal system whose fiber shadow is not nearly simple"
        )
    li_yorke_visible = None
    if has_li_yorke:
        li_yorke_visible = not fiber_report.is_completely_regular

    # Proximality decided two ways: pair-graph diagonality, and existence
    # of a collapsing element of the fiber semigroup.
    prox_pairs = []
    seed_idx = {s: i for i, s in enumerate(seeds)}
    for s, s2 in combinations(seeds, 2):
        graph_prox = any(
            p.proximal for p in pairs if set(p.pair) == {s, s2}
        )
        collapse = any(
            t.images[seed_idx[s]] == t.images[seed_idx[s2]]
            for t in fib.base.elements
        )
        if graph_prox != collapse:
            raise ConsistencyError(
                f"pair-graph proximality and collapsing-element test disagree "
                f"on ({s},{s2}): graph={graph_prox} collapse={collapse}"
            )
        if graph_prox:
            prox_pairs.append((s, s2))
    prox_pairs = tuple(prox_pairs)

    fwd_prox = [tuple(p.pair) for p in of(FORWARD) if p.proximal]
    bwd_prox = [tuple(p.pair) for p in of(BACKWARD) if p.proximal]
    fwd_trans = _transitive(seeds, fwd_prox)
    bwd_trans = _transitive(seeds, bwd_prox)
    prox_trans = _transitive(seeds, prox_pairs)
    prediction = None
    if fwd_trans and bwd_trans:
        prediction = 1 if prox_trans else 2

    m_plus = fib.directional_kernel(fib.forward)
    m_minus = fib.directional_kernel(fib.backward)
    kernels_equal = m_plus == m_minus

    # Kernel of the base = union of the directional kernels.
    if m_plus | m_minus != kernel(fib.base).kernel:
        raise ConsistencyError(
            "base kernel differs from the union of the directional kernels"
        )

    witness = None
    if fiber_report.non_regular:
        witness = fib.word(fiber_report.non_regular[0])
    if witness is not None and not has_li_yorke:
        raise ConsistencyError(
            "fiber shadow has a non-completely-regular element but no pair "
            "is Li-Yorke in either direction"
        )

    return ClassificationReport(
        seeds=seeds,
        pairs=pairs,
        forward_almost_distal=forward_ad,
        backward_almost_distal=backward_ad,
        predicted_nearly_simple=predicted,
        predicted_completely_regular=predicted,
        proximal_pairs=prox_pairs,
        proximality_transitive=prox_trans,
        forward_proximality_transitive=fwd_trans,
        backward_proximality_transitive=bwd_trans,
        minimal_left_ideal_prediction=prediction,
        directional_kernels_equal=kernels_equal,
        fiber=fib,
        fiber_report=fiber_report,
        non_regular_witness=witness,
        li_yorke_visible_in_shadow=li_yorke_visible,
    )


@dataclass(frozen=True)
class LiYorkeWitnessMap:
    pair: tuple[str, str]
    map_word: str
    base_index: int
    image_pair: tuple[str, str]  # distinct, forward asymptotic
    image_of_square: tuple[str, ...]
    image_of_map: tuple[str, ...]


def li_yorke_witness_map(
    subst: Substitution,
    s: str,
    s2: str,
    fib: FiberSemigroup | None = None,
) -> LiYorkeWitnessMap:
    """A forward-shadow element separating a Li-Yorke pair into a
    forward-asymptotic pair; such a map cannot be injective on its image.
    """
    verdict = classify_pair(subst, s, s2, FORWARD, witness_count=0)
    if verdict.verdict != "li_yorke":
        raise PreconditionError(
            f"({s},{s2}) is {verdict.verdict}, not a forward Li-Yorke pair"
        )
    if fib is None:
        fib = build_fiber_semigroup(subst)
    seeds = fib.seeds
    seed_idx = {x: i for i, x in enumerate(seeds)}

    for idx in fib.forward:
        t = fib.base.elements[idx]
        p, q = seeds[t.images[seed_idx[s]]], seeds[t.images[seed_idx[s2]]]
        if p == q:
            continue
        if classify_pair(subst, p, q, FORWARD, witness_count=0).verdict != "asymptotic":
            continue
        square = compose(t, t)
        if not (square.image() < t.image()):
            raise ConsistencyError(
                f"witness {t.word(seeds)} separates the pair into an asymptotic "
                "pair but its square does not shrink the image"
            )
        from .semigroup import completely_regular_witness

        if completely_regular_witness(fib.base, idx) is not None:
            raise ConsistencyError(
                f"witness {t.word(seeds)} is completely regular"
            )
        return LiYorkeWitnessMap(
            pair=(s, s2),
            map_word=t.word(seeds),
            base_index=idx,
            image_pair=(p, q),
            image_of_square=tuple(seeds[i] for i in sorted(square.image())),
            image_of_map=tuple(seeds[i] for i in sorted(t.image())),
        )
    raise ShadowBlindSpotError(
        f"no forward-shadow element realises the Li-Yorke witness for "
        f"({s},{s2}); the separating element exists in the full Ellis "
        "semigroup but does not preserve the distinguished fiber"
    )


def materialisable_kernel_model(
    subst: Substitution, depth: int, fib: FiberSemigroup | None = None
):
    """Build the kernel model at the largest depth <= `depth` whose table
    fits the materialisation cap.  Returns (model, None) or (None, reason)
    when the model genuinely does not apply."""
    k = depth
    while k >= 0:
        try:
            return kernel_model(subst, k, fib=fib), None
        except PreconditionError:
            k -= 1
        except KernelModelUnavailable as exc:
            return None, str(exc)
    return None, "no materialisable depth"


def full_model_report(
    subst: Substitution,
    depth: int,
    fib: FiberSemigroup | None = None,
    classification: ClassificationReport | None = None,
) -> dict:
    """Stratify the full Ellis semigroup as far as the shadow supports.

    Strata: a symbolic copy of the acting group (shift powers); the
    kernel (explicit product model when available, otherwise the fiber
    kernel with its identification flagged unproven); and an
    intermediate stratum of non-unit non-kernel fiber maps keyed by
    (map, shift offset mod L^depth).
    """
    if fib is None:
        fib = build_fiber_semigroup(subst)
    if classification is None:
        classification = classify_system(subst, fib=fib)
    base = fib.base
    ker = kernel(base).kernel
    modulus = subst.length ** depth

    units_stratum = {
        "name": "shift_powers",
        "description": "copy of the acting group Z, represented symbolically",
    }
    fiber_units = sorted(
        fib.word(i) for i in base.units() if i != fib.identity_index
    )
    if fiber_units:
        units_stratum["fiber_units"] = fiber_units
        units_stratum["note"] = (
            "additional elements invertible in the fiber shadow"
        )
    strata = [units_stratum]
    model, model_reason = materialisable_kernel_model(subst, depth, fib)
    if len(base) > 1:
        stratum = {
            "name": "kernel",
            "fiber_kernel": sorted(fib.word(i) for i in ker),
        }
        if model is not None:
            stratum["model"] = {
                "left_zero_labels": list(model.labels),
                "odometer": {"base": model.base_length, "depth": depth},
                "materialised_depth": model.depth,
                "size": len(model.labels) * modulus,
                "identification": (
                    "kernel = fiber kernel x odometer, valid in the almost "
                    "one-to-one regime; assumed, not derived, for this input"
                ),
            }
        else:
            stratum["model"] = None
            stratum["declined"] = model_reason
            stratum["note"] = (
                "identification of the kernel with a product model is "
                "unproven for this substitution"
            )
        strata.append(stratum)

    middle = sorted(set(range(len(base))) - set(ker) - set(base.units()))
    if middle:
        products_fall_into_kernel = all(
            base.table[i][j] in ker for i in middle for j in middle
        )
        strata.append(
            {
                "name": "intermediate",
                "maps": [fib.word(i) for i in middle],
                "offset_modulus": modulus,
                "size": len(middle) * modulus,
                "products_fall_into_kernel": products_fall_into_kernel,
            }
        )

    return {
        "depth": depth,
        "strata": strata,
        "stratum_count": len(strata),
        "nearly_simple_predicted": classification.predicted_nearly_simple,
        "minimality_note": None
        if subst.is_primitive
        else "substitution is not primitive; minimality of the subshift is "
        "not guaranteed and theorem-based identifications are suppressed",
    }
