"""Rees matrix semigroups and the completely-simple structure theorem.

A matrix semigroup over a group G with index sets I (rows of the
egg-box, i.e. R-classes) and Lambda (columns, L-classes) and a
Lambda x I sandwich matrix A multiplies as

    (i, g, lam) (j, h, mu) = (i, g a[lam][j] h, mu).

`rees_decompose` recovers this presentation from any completely simple
FiniteSemigroup and verifies the isomorphism element by element against
both Cayley tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ConsistencyError, PreconditionError
from .semigroup import (
    FiniteSemigroup,
    from_table,
    greens,
    minimal_left_ideals,
    structure_report,
    sub_semigroup,
)


@dataclass(frozen=True)
class ReesData:
    group: FiniteSemigroup
    i_size: int
    lambda_size: int
    sandwich: tuple[tuple[int, ...], ...]  # lambda_size x i_size, group indices
    normalized: bool

    def __post_init__(self):
        if not self.group.is_group():
            raise PreconditionError("Rees data requires a group")
        if len(self.sandwich) != self.lambda_size or any(
            len(row) != self.i_size for row in self.sandwich
        ):
            raise PreconditionError("sandwich matrix shape mismatch")
        ng = len(self.group)
        for row in self.sandwich:
            for v in row:
                if not (0 <= v < ng):
                    raise PreconditionError("sandwich entry out of group range")
        if self.normalized:
            e = self.group.identity_index
            if any(v != e for v in self.sandwich[0]) or any(
                row[0] != e for row in self.sandwich
            ):
                raise PreconditionError(
                    "normalized flag set but first row/column is not the identity"
                )


def group_inverse(g: FiniteSemigroup, a: int) -> int:
    e = g.identity_index
    for b in range(len(g)):
        if g.table[a][b] == e and g.table[b][a] == e:
            return b
    raise PreconditionError("element has no inverse; not a group")


def rees_multiply(d: ReesData, x, y):
    """The matrix-semigroup product; x, y are (i, g_index, lam) triples."""
    i, g, lam = x
    j, h, mu = y
    if not (0 <= i < d.i_size and 0 <= j < d.i_size):
        raise PreconditionError("row index out of range")
    if not (0 <= lam < d.lambda_size and 0 <= mu < d.lambda_size):
        raise PreconditionError("column index out of range")
    middle = d.group.table[d.group.table[g][d.sandwich[lam][j]]][h]
    return (i, middle, mu)


def rees_semigroup(d: ReesData) -> FiniteSemigroup:
    """Materialise M[G; I, Lambda; A] as a FiniteSemigroup on index triples."""
    elements = [
        (i, g, lam)
        for i in range(d.i_size)
        for g in range(len(d.group))
        for lam in range(d.lambda_size)
    ]
    index = {e: k for k, e in enumerate(elements)}
    table = [
        [index[rees_multiply(d, x, y)] for y in elements] for x in elements
    ]
    return from_table(tuple(elements), table, validate=False)


def rees_idempotents(d: ReesData):
    """The idempotents are exactly (i, a[lam][i]^-1, lam)."""
    return {
        (i, group_inverse(d.group, d.sandwich[lam][i]), lam)
        for i in range(d.i_size)
        for lam in range(d.lambda_size)
    }


@dataclass(frozen=True)
class ReesDecomposition:
    data: ReesData
    rebuilt: FiniteSemigroup
    iso: tuple[int, ...]  # iso[source index] = index in rebuilt


def _idempotent_in(s: FiniteSemigroup, cell) -> int:
    for x in cell:
        if s.table[x][x] == x:
            return x
    raise ConsistencyError("H-class of a completely simple semigroup lacks an idempotent")


def rees_decompose(s: FiniteSemigroup) -> ReesDecomposition:
    """Present a completely simple semigroup as a matrix semigroup.

    I indexes the R-classes and Lambda the L-classes; G is the H-class of
    the first idempotent e.  Representatives are the idempotents in e's
    row and column of the egg box, which makes the extracted sandwich
    matrix automatically normalized.  The returned isomorphism is checked
    on every product.
    """
    rep = structure_report(s)
    if not rep.is_completely_simple:
        raise PreconditionError("rees_decompose requires a completely simple semigroup")
    gr = greens(s)
    e = s.idempotents[0]

    r_classes = list(gr.r_classes)
    l_classes = list(gr.l_classes)
    e_r = next(k for k, c in enumerate(r_classes) if e in c)
    e_l = next(k for k, c in enumerate(l_classes) if e in c)
    # Reorder so the designated row/column of the sandwich matrix is the first.
    r_classes.insert(0, r_classes.pop(e_r))
    l_classes.insert(0, l_classes.pop(e_l))

    h_e = tuple(sorted(set(r_classes[0]) & set(l_classes[0])))
    group = sub_semigroup(s, h_e)
    if not group.is_group():
        raise ConsistencyError("H-class of a minimal idempotent is not a group")
    g_index = {x: k for k, x in enumerate(h_e)}

    # r[i]: idempotent in R_i intersect L_0; q[lam]: idempotent in R_0 intersect L_lam.
    r_reps = [
        _idempotent_in(s, set(r_classes[i]) & set(l_classes[0]))
        for i in range(len(r_classes))
    ]
    q_reps = [
        _idempotent_in(s, set(r_classes[0]) & set(l_classes[lam]))
        for lam in range(len(l_classes))
    ]
    assert r_reps[0] == e == q_reps[0]

    sandwich = tuple(
        tuple(g_index[s.table[q_reps[lam]][r_reps[i]]] for i in range(len(r_classes)))
        for lam in range(len(l_classes))
    )
    data = ReesData(
        group=group,
        i_size=len(r_classes),
        lambda_size=len(l_classes),
        sandwich=sandwich,
        normalized=True,
    )
    rebuilt = rees_semigroup(data)

    r_of = {a: i for i, c in enumerate(r_classes) for a in c}
    l_of = {a: lam for lam, c in enumerate(l_classes) for a in c}
    iso = []
    for a in range(len(s)):
        i, lam = r_of[a], l_of[a]
        matches = [
            g for g in range(len(group))
            if s.table[s.table[r_reps[i]][h_e[g]]][q_reps[lam]] == a
        ]
        if len(matches) != 1:
            raise ConsistencyError("Rees coordinates are not unique")
        iso.append(rebuilt.index((i, matches[0], lam)))
    _verify_isomorphism(s, rebuilt, tuple(iso))
    return ReesDecomposition(data, rebuilt, tuple(iso))


def _verify_isomorphism(s: FiniteSemigroup, t: FiniteSemigroup, iso) -> None:
    if len(s) != len(t) or len(set(iso)) != len(s):
        raise ConsistencyError("claimed isomorphism is not a bijection")
    for a in range(len(s)):
        for b in range(len(s)):
            if iso[s.table[a][b]] != t.table[iso[a]][iso[b]]:
                raise ConsistencyError(f"isomorphism fails on product ({a},{b})")


def rees_normalize(d: ReesData) -> tuple[ReesData, FiniteSemigroup, FiniteSemigroup, tuple[int, ...]]:
    """Scale the sandwich matrix so row 0 and column 0 are the identity.

    Returns (normalized data, original semigroup, normalized semigroup,
    isomorphism original -> normalized), with the isomorphism verified.
    The scaling is a'[lam][i] = u[lam] a[lam][i] v[i] with
    u[lam] = a[lam][0]^-1 and v[i] = a[0][i]^-1 a[0][0], carried by the
    element map (i, g, lam) -> (i, v[i]^-1 g u[lam]^-1, lam).
    """
    g = d.group
    mul = lambda x, y: g.table[x][y]
    inv = lambda x: group_inverse(g, x)
    u = [inv(d.sandwich[lam][0]) for lam in range(d.lambda_size)]
    v = [mul(inv(d.sandwich[0][i]), d.sandwich[0][0]) for i in range(d.i_size)]
    new_sandwich = tuple(
        tuple(mul(mul(u[lam], d.sandwich[lam][i]), v[i]) for i in range(d.i_size))
        for lam in range(d.lambda_size)
    )
    norm = ReesData(g, d.i_size, d.lambda_size, new_sandwich, normalized=True)

    original = rees_semigroup(d)
    rebuilt = rees_semigroup(norm)
    iso = []
    for (i, gg, lam) in original.elements:
        target = (i, mul(mul(inv(v[i]), gg), inv(u[lam])), lam)
        iso.append(rebuilt.index(target))
    _verify_isomorphism(original, rebuilt, tuple(iso))
    return norm, original, rebuilt, tuple(iso)


# ---------------------------------------------------------------------------
# Left-simple cover dichotomy


def _is_left_simple_subset(s: FiniteSemigroup, subset) -> bool:
    sub = set(subset)
    if not sub:
        return False
    for a in sub:
        for b in sub:
            if s.table[a][b] not in sub:
                return False
    for a in sub:
        generated = {a} | {s.table[x][a] for x in sub}
        if generated != sub:
            return False
    return True


def left_simple_dichotomy(s: FiniteSemigroup, s1, s2) -> str:
    """Decide which branch of the two-cover dichotomy holds.

    Preconditions (violations raise PreconditionError, not a lemma
    failure): s is completely simple; s1, s2 are left simple
    subsemigroups with s1 u s2 = s.  Returns 'left_simple' or
    'two_minimal_left_ideals'; in the second branch the cover must be
    disjoint and equal to the set of minimal left ideals.
    """
    s1, s2 = frozenset(s1), frozenset(s2)
    if not structure_report(s).is_completely_simple:
        raise PreconditionError("dichotomy requires a completely simple semigroup")
    for part in (s1, s2):
        if not _is_left_simple_subset(s, part):
            raise PreconditionError("cover member is not a left simple subsemigroup")
    if s1 | s2 != frozenset(range(len(s))):
        raise PreconditionError("subsemigroups do not cover the semigroup")

    full = frozenset(range(len(s)))
    left_simple = all(s.left_ideal_of(a) == full for a in range(len(s)))
    if left_simple:
        return "left_simple"
    if s1 & s2:
        raise ConsistencyError("non-left-simple cover is not disjoint")
    if {s1, s2} != set(minimal_left_ideals(s)):
        raise ConsistencyError("cover members are not the minimal left ideals")
    return "two_minimal_left_ideals"


# ---------------------------------------------------------------------------
# Generic isomorphism search (independent of the explicit Rees maps)


def small_generating_set(s: FiniteSemigroup) -> tuple[int, ...]:
    chosen = []
    reached = set()
    for a in range(len(s)):
        if a in reached:
            continue
        chosen.append(a)
        reached = set(chosen)
        frontier = list(reached)
        while frontier:
            nxt = []
            for x in frontier:
                for g in chosen:
                    for y in (s.table[x][g], s.table[g][x]):
                        if y not in reached:
                            reached.add(y)
                            nxt.append(y)
            frontier = nxt
        if len(reached) == len(s):
            break
    return tuple(chosen)


def _element_profile(s: FiniteSemigroup, a: int):
    seen = {a: 1}
    y, k = a, 1
    while True:
        y = s.table[y][a]
        k += 1
        if y in seen:
            index, period = seen[y], k - seen[y]
            break
        seen[y] = k
    return (
        index,
        period,
        len(s.left_ideal_of(a)),
        len(s.right_ideal_of(a)),
        len(s.two_sided_ideal_of(a)),
        s.table[a][a] == a,
    )


def find_isomorphism(s: FiniteSemigroup, t: FiniteSemigroup):
    """Backtracking isomorphism search over generator images.

    Candidate images are pruned by cyclic index/period and ideal-size
    signatures.  Returns the image list (iso[a] = image of a) or None.
    Intended for the small instances of the oracle suites.
    """
    if len(s) != len(t):
        return None
    prof_s = [_element_profile(s, a) for a in range(len(s))]
    prof_t = [_element_profile(t, a) for a in range(len(t))]
    if sorted(prof_s) != sorted(prof_t):
        return None

    gens = small_generating_set(s)
    candidates = [
        [b for b in range(len(t)) if prof_t[b] == prof_s[g]] for g in gens
    ]

    def close(assignment):
        known = dict(assignment)
        used = set(known.values())
        if len(used) != len(known):
            return None
        frontier = list(known)
        while frontier:
            nxt = []
            for x in frontier:
                for g in known.copy():
                    for (sp, tp) in (
                        (s.table[x][g], t.table[known[x]][known[g]]),
                        (s.table[g][x], t.table[known[g]][known[x]]),
                    ):
                        if sp in known:
                            if known[sp] != tp:
                                return None
                        else:
                            if tp in used:
                                return None
                            known[sp] = tp
                            used.add(tp)
                            nxt.append(sp)
            frontier = nxt
        return known

    for images in product(*candidates):
        known = close(list(zip(gens, images)))
        if known is None or len(known) != len(s):
            continue
        iso = tuple(known[a] for a in range(len(s)))
        if all(
            iso[s.table[a][b]] == t.table[iso[a]][iso[b]]
            for a in range(len(s))
            for b in range(len(s))
        ):
            return iso
    return None
