"""Exact classification of fixed-point pairs per direction.

The verdict comes entirely from the recurrent part R of the pair graph
(columns.recurrent_tuples), never from sampling:

    asymptotic   iff  R contains only diagonal pairs
    proximal     iff  R contains a diagonal pair (a recurring diagonal
                      pair expands to fully diagonal blocks, forcing
                      agreement runs of unbounded length arbitrarily far
                      out)
    li_yorke     iff  proximal and not asymptotic
    distal_pair  iff  R contains no diagonal pair

Li-Yorke witnesses (n_k, N_k) are emitted by window scanning purely for
illustration; the verdict never depends on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .columns import nondiagonal_extent, recurrent_tuples
from .errors import ConsistencyError, PreconditionError
from .fixedpoint import FixedPoint
from .substitution import Substitution, fixed_point_seeds

FORWARD = "forward"
BACKWARD = "backward"
_SIDE = {FORWARD: "positive", BACKWARD: "negative"}


@dataclass(frozen=True)
class PairClassification:
    pair: tuple[str, str]
    direction: str
    verdict: str  # asymptotic | li_yorke | distal_pair
    proximal: bool
    asymptotic: bool
    witnesses: tuple[tuple[int, int], ...]  # (n_k, N_k) per the Li-Yorke pattern
    threshold: int | None  # agreement threshold for asymptotic verdicts
    recurrent_pairs: tuple[tuple[str, str], ...]  # proof data

    def __post_init__(self):
        if self.asymptotic and not self.proximal:
            raise ConsistencyError("asymptotic verdict without proximality")
        if (self.verdict == "li_yorke") != (self.proximal and not self.asymptotic):
            raise ConsistencyError("verdict flags contradict each other")


def _li_yorke_witnesses(subst, s, s2, direction, count, horizon):
    """Scan geometrically growing windows for (n_k, N_k) witness pairs:
    a disagreement at n_k followed by N_k agreeing positions, both
    sequences strictly increasing and N_k >= k."""
    x, y = FixedPoint(subst, s), FixedPoint(subst, s2)
    sign = 1 if direction == FORWARD else -1
    w = x.covering_window(-(horizon + 2), horizon + 2)
    wy = y.covering_window(-(horizon + 2), horizon + 2)

    witnesses = []
    prev_n = 0
    m = 1
    while len(witnesses) < count and m <= horizon:
        if w.letter(sign * m) != wy.letter(sign * m):
            run = 0
            while m + run + 1 <= horizon + 1 and w.letter(sign * (m + run + 1)) == wy.letter(
                sign * (m + run + 1)
            ):
                run += 1
            k = len(witnesses) + 1
            target = max(k, witnesses[-1][1] + 1 if witnesses else 1)
            if run >= target:
                witnesses.append((m, target))
                prev_n = m
                m = m + run + 1
                continue
            m = m + run + 1
        else:
            m += 1
    if len(witnesses) < count:
        raise ConsistencyError(
            f"found only {len(witnesses)} of {count} Li-Yorke witnesses within "
            f"horizon {horizon}; increase the scan window"
        )
    return tuple(witnesses)


def classify_pair(
    subst: Substitution,
    s: str,
    s2: str,
    direction: str = FORWARD,
    witness_count: int = 5,
    horizon: int | None = None,
) -> PairClassification:
    if direction not in _SIDE:
        raise PreconditionError(f"unknown direction {direction!r}")
    seeds = fixed_point_seeds(subst)
    if s == s2:
        raise PreconditionError("pair classification requires two distinct seeds")
    for t in (s, s2):
        if t not in seeds:
            raise PreconditionError(f"{t!r} is not a fixed-point seed")

    side = _SIDE[direction]
    recurrent = tuple(sorted(recurrent_tuples(subst, (s, s2), side)))
    if not recurrent:
        raise ConsistencyError("recurrent pair set is empty on an infinite side")
    has_diag = any(u == v for (u, v) in recurrent)
    has_nondiag = any(u != v for (u, v) in recurrent)
    asymptotic = not has_nondiag
    proximal = has_diag

    witnesses = ()
    threshold = None
    if asymptotic:
        verdict = "asymptotic"
        threshold = nondiagonal_extent(subst, (s, s2), side)
        assert threshold is not None
    elif proximal:
        verdict = "li_yorke"
        if witness_count:
            if horizon is None:
                horizon = subst.length ** 6
            witnesses = _li_yorke_witnesses(
                subst, s, s2, direction, witness_count, horizon
            )
    else:
        verdict = "distal_pair"

    return PairClassification(
        pair=(s, s2),
        direction=direction,
        verdict=verdict,
        proximal=proximal,
        asymptotic=asymptotic,
        witnesses=witnesses,
        threshold=threshold,
        recurrent_pairs=recurrent,
    )
