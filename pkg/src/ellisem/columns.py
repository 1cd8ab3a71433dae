"""Columns of fixed-point families and exact recurrence analysis.

For seeds s1..sr, the tuple sequence Y[m] = (x_s1[m], ..., x_sr[m]) is
itself fixed by shift-then-substitute for the coordinatewise product
substitution on r-tuples.  Which tuples occur at arbitrarily large
positive (or negative) positions is therefore a finite question about
the letter graph of that product substitution (u -> v iff v occurs in
the block of u): a tuple recurs on a side iff it is reachable from a
cycle vertex that is itself reachable from that side's root letters.
No sampling is involved anywhere.

Roots: with the seed tuple B at position 0, the block of B lands on
positions [-1, L-2], so the left tail is generated by block(B)[0] at
position -1, and (for L >= 3) the right tail by block(B)[2..L-1] at
positions 1..L-2.  For L = 2 the right tail hangs off the self-seeded
position 1 (see fixedpoint), and its root is block(U)[1] at position 2
for the right-seed tuple U.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .fixedpoint import FixedPoint, right_seed_for_length_two
from .substitution import Substitution, fixed_point_seeds
from .transformation import Transformation


def tuple_block(subst: Substitution, tup):
    """Coordinatewise expansion: block(t)[j] = (theta(t_i)[j] for i)."""
    rules = [subst.rule(a) for a in tup]
    return [tuple(r[j] for r in rules) for j in range(subst.length)]


def _germ_tuples(subst: Substitution, seeds):
    beta = tuple(seeds)
    upsilon = None
    if subst.length == 2 and len(subst.alphabet) > 1:
        upsilon = tuple(right_seed_for_length_two(subst, s) for s in seeds)
    return beta, upsilon


def _side_roots(subst: Substitution, beta, upsilon, side):
    """Root tuples with a position where each provably occurs."""
    if side == "negative":
        return [(tuple_block(subst, beta)[0], -1)]
    if side != "positive":
        raise PreconditionError(f"unknown side {side!r}")
    if subst.length >= 3:
        block = tuple_block(subst, beta)
        return [(block[r], r - 1) for r in range(2, subst.length)]
    block = tuple_block(subst, upsilon)
    return [(block[1], 2)]


def _reach_with_positions(subst: Substitution, roots):
    """BFS closure under tuple expansion, remembering one occurrence
    position per discovered tuple (positions follow the child rule
    pos' = L*pos + (j-1) for child index j)."""
    ell = subst.length
    pos = {}
    frontier = []
    for tup, p in roots:
        if tup not in pos:
            pos[tup] = p
            frontier.append(tup)
    while frontier:
        nxt = []
        for tup in frontier:
            p = pos[tup]
            for j, child in enumerate(tuple_block(subst, tup)):
                if child not in pos:
                    pos[child] = ell * p + (j - 1)
                    nxt.append(child)
        frontier = nxt
    return pos


def _on_cycle(subst: Substitution, tup, domain) -> bool:
    """Can tup reach itself in >= 1 expansion step (within domain)?"""
    frontier = [c for c in tuple_block(subst, tup) if c in domain]
    seen = set(frontier)
    while frontier:
        nxt = []
        for t in frontier:
            if t == tup:
                return True
            for c in tuple_block(subst, t):
                if c in domain and c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return tup in seen


def recurrent_tuples(subst: Substitution, seeds, side):
    """Tuples occurring at arbitrarily large positions on the given side,
    with a provenance position each: Reach(cycles intersected with
    Reach(roots)).  `side` is 'positive' or 'negative'."""
    beta, upsilon = _germ_tuples(subst, seeds)
    roots = _side_roots(subst, beta, upsilon, side)
    reach = _reach_with_positions(subst, roots)
    cyc = [(t, p) for t, p in reach.items() if _on_cycle(subst, t, reach)]
    return _reach_with_positions(subst, cyc)


@dataclass(frozen=True)
class ColumnMap:
    """The map seed -> x_seed[position], as a letter tuple over the seeds."""

    seeds: tuple[str, ...]
    values: tuple[str, ...]
    position: int  # a position where this column provably occurs

    def as_transformation(self) -> Transformation:
        idx = {s: i for i, s in enumerate(self.seeds)}
        try:
            return Transformation(tuple(idx[v] for v in self.values))
        except KeyError as exc:
            raise PreconditionError(
                f"column at {self.position} takes non-seed value {exc.args[0]!r}"
            ) from exc

    def __str__(self):
        return "".join(self.values)


def column_map_at(subst: Substitution, seeds, m: int) -> ColumnMap:
    """Read the column s -> x_s[m] off the fixed-point windows."""
    seeds = tuple(seeds)
    values = tuple(FixedPoint(subst, s)[m] for s in seeds)
    return ColumnMap(seeds, values, m)


def occurring_columns(subst: Substitution, seeds=None, side="all"):
    """The exact set of columns occurring in the requested range.

    'positive'/'negative' mean: occurring at arbitrarily large positive
    (negative) positions.  'all' additionally includes the seed column
    at position 0 (the identity on seeds), since position 0 is a
    permitted reading position there.  Deterministically sorted by
    value tuple.
    """
    if seeds is None:
        seeds = fixed_point_seeds(subst)
    seeds = tuple(seeds)
    if not seeds:
        raise PreconditionError("substitution has no fixed-point seeds")
    found = {}
    if side in ("positive", "all"):
        for tup, p in recurrent_tuples(subst, seeds, "positive").items():
            found.setdefault(tup, p)
    if side in ("negative", "all"):
        for tup, p in recurrent_tuples(subst, seeds, "negative").items():
            found.setdefault(tup, p)
    if side == "all":
        found.setdefault(tuple(seeds), 0)
    elif side not in ("positive", "negative"):
        raise PreconditionError(f"unknown side {side!r}")
    return tuple(
        ColumnMap(seeds, values, pos)
        for values, pos in sorted(found.items())
    )


def nondiagonal_extent(subst: Substitution, pair, side):
    """Exact bound on how far non-diagonal pairs occur on a side.

    For a forward-asymptotic pair, returns the largest position carrying a
    disagreement (>= 0 because the seed pair itself disagrees at 0);
    symmetric for 'negative' (most negative position, <= 0).  Returns
    None when non-diagonal pairs recur on that side (no bound exists).

    All walks to a transient tuple stay inside the transient part, which
    is acyclic, so a longest-path style propagation over provenance
    positions is exact.
    """
    beta, upsilon = _germ_tuples(subst, pair)
    roots = _side_roots(subst, beta, upsilon, side)
    reach = _reach_with_positions(subst, roots)
    recurrent = recurrent_tuples(subst, pair, side)
    if any(t[0] != t[1] for t in recurrent):
        return None
    transient = {t for t in reach if t not in recurrent}

    ell = subst.length
    better = max if side == "positive" else min
    best = {t: p for t, p in roots if t in transient}
    # Bellman-Ford style relaxation; the transient subgraph is acyclic so
    # |transient| rounds suffice.
    for _ in range(len(transient)):
        changed = False
        for t in transient:
            if t not in best:
                continue
            for j, child in enumerate(tuple_block(subst, t)):
                if child not in transient:
                    continue
                cand = ell * best[t] + (j - 1)
                if child not in best or better(cand, best[child]) != best[child]:
                    best[child] = better(cand, best.get(child, cand))
                    changed = True
        if not changed:
            break
    extents = [p for t, p in best.items() if t[0] != t[1]]
    extents.append(0)  # the seed pair disagrees at position 0
    return better(extents)
