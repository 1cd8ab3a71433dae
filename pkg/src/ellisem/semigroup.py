"""Finite semigroups given by transformation generators or an explicit Cayley table.

Everything here is exact and deterministic.  Elements are referred to by
index into `FiniteSemigroup.elements`; the canonical element order for
closures is breadth-first by generator-word length, ties broken
lexicographically by image tuples, so repeated runs produce identical
structures.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

from .errors import ConsistencyError, PreconditionError
from .transformation import (
    Transformation,
    compose,
    image_stable,
    restricted_inverse_square,
    restriction_to_image_is_bijective,
)


@dataclass(frozen=True)
class FiniteSemigroup:
    """Element list + Cayley table + generator provenance.

    `elements` holds canonical element objects (Transformations, or opaque
    hashables when built from a raw table); `table[i][j]` is the index of
    elements[i] * elements[j].
    """

    elements: tuple
    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def mult(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, element) -> int:
        return self._index[element]

    @cached_property
    def _index(self):
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def identity_index(self):
        n = len(self)
        for e in range(n):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(n)):
                return e
        return None

    @property
    def has_unit(self) -> bool:
        return self.identity_index is not None

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self)) if self.table[i][i] == i)

    def left_ideal_of(self, a: int) -> frozenset[int]:
        """S^1 a, computed as {a} u Sa (no unit adjoined)."""
        return frozenset({a} | {self.table[s][a] for s in range(len(self))})

    def right_ideal_of(self, a: int) -> frozenset[int]:
        return frozenset({a} | {self.table[a][s] for s in range(len(self))})

    def two_sided_ideal_of(self, a: int) -> frozenset[int]:
        n = range(len(self))
        sa = {self.table[s][a] for s in n}
        as_ = {self.table[a][s] for s in n}
        sas = {self.table[x][s] for x in sa for s in n}
        return frozenset({a} | sa | as_ | sas)

    def units(self) -> frozenset[int]:
        """Invertible elements; empty when there is no unit."""
        e = self.identity_index
        if e is None:
            return frozenset()
        n = range(len(self))
        return frozenset(
            a for a in n
            if any(self.table[a][b] == e and self.table[b][a] == e for b in n)
        )

    def is_group(self) -> bool:
        """Finite + cancellative (Latin square table) + unit <=> group."""
        n = len(self)
        full = set(range(n))
        return (
            self.has_unit
            and all(set(row) == full for row in self.table)
            and all({self.table[i][j] for i in range(n)} == full for j in range(n))
        )

    def power(self, a: int, k: int) -> int:
        assert k >= 1
        y = a
        for _ in range(k - 1):
            y = self.table[y][a]
        return y


def closure(generators) -> FiniteSemigroup:
    """Smallest composition-closed set containing the generators.

    Breadth-first over right multiplication by generators; every word
    g1 g2 ... gk is reached because it equals (g1 ... g(k-1)) * gk.
    """
    gens = list(generators)
    if not gens:
        raise PreconditionError("empty generator list rejected")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise PreconditionError("generators must share a degree")

    level = sorted(set(gens))
    elements = list(level)
    seen = set(level)
    while level:
        new = set()
        for x in level:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    new.add(y)
        level = sorted(new)
        seen.update(level)
        elements.extend(level)

    index = {e: i for i, e in enumerate(elements)}
    table = tuple(
        tuple(index[compose(x, y)] for y in elements) for x in elements
    )
    gen_indices = tuple(sorted({index[g] for g in gens}))
    return FiniteSemigroup(tuple(elements), table, gen_indices)


def from_table(elements, table, generators=None, validate=True) -> FiniteSemigroup:
    """Build a FiniteSemigroup from an explicit Cayley table.

    Checks closure, associativity and that the generators really generate;
    pass validate=False only for tables whose associativity is inherited
    from an already-validated construction.
    """
    elements = tuple(elements)
    n = len(elements)
    table = tuple(tuple(row) for row in table)
    if len(table) != n or any(len(row) != n for row in table):
        raise PreconditionError("table shape does not match element count")
    if validate:
        for row in table:
            for v in row:
                if not (0 <= v < n):
                    raise PreconditionError(f"table entry {v} out of range")
        for i in range(n):
            for j in range(n):
                tij = table[i][j]
                for k in range(n):
                    if table[tij][k] != table[i][table[j][k]]:
                        raise PreconditionError(
                            f"associativity fails at ({i},{j},{k})"
                        )
    if generators is None:
        generators = tuple(range(n))
    else:
        generators = tuple(generators)
        reached = set(generators)
        frontier = list(generators)
        while frontier:
            nxt = []
            for x in frontier:
                for g in generators:
                    y = table[x][g]
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        if reached != set(range(n)):
            raise PreconditionError("generators do not generate all elements")
    return FiniteSemigroup(elements, table, generators)


def from_function(elements, mult, generators=None, validate=True) -> FiniteSemigroup:
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    table = [
        [index[mult(a, b)] for b in elements] for a in elements
    ]
    return from_table(elements, table, generators, validate=validate)


def left_zero(labels) -> FiniteSemigroup:
    """The left-zero semigroup on the given labels: x * y = x."""
    labels = tuple(labels)
    n = len(labels)
    table = tuple(tuple(i for _ in range(n)) for i in range(n))
    return FiniteSemigroup(labels, table, tuple(range(n)))


def cyclic_group(n: int) -> FiniteSemigroup:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteSemigroup(tuple(range(n)), table, tuple(range(n)))


def product_semigroup(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteSemigroup:
    """Direct product with componentwise multiplication (associativity inherited)."""
    elements = tuple((a, b) for a in s.elements for b in t.elements)
    nt = len(t)

    def pmul(i, j):
        si, ti = divmod(i, nt)
        sj, tj = divmod(j, nt)
        return s.table[si][sj] * nt + t.table[ti][tj]

    n = len(elements)
    table = tuple(tuple(pmul(i, j) for j in range(n)) for i in range(n))
    return FiniteSemigroup(elements, table, tuple(range(n)))


def sub_semigroup(s: FiniteSemigroup, indices) -> FiniteSemigroup:
    """Restriction to a subset of element indices; the subset must be closed."""
    sub = sorted(set(indices))
    pos = {v: i for i, v in enumerate(sub)}
    for a in sub:
        for b in sub:
            if s.table[a][b] not in pos:
                raise PreconditionError("subset is not closed under products")
    table = tuple(tuple(pos[s.table[a][b]] for b in sub) for a in sub)
    return FiniteSemigroup(
        tuple(s.elements[a] for a in sub), table, tuple(range(len(sub)))
    )


def quotient(s: FiniteSemigroup, partition) -> FiniteSemigroup:
    """Quotient by a congruence given as a partition of element indices.

    Raises PreconditionError when the partition is not a congruence.
    """
    classes = [tuple(sorted(c)) for c in partition]
    classes.sort(key=lambda c: c[0])
    cls_of = {}
    for ci, members in enumerate(classes):
        for m in members:
            if m in cls_of:
                raise PreconditionError("partition cells overlap")
            cls_of[m] = ci
    if set(cls_of) != set(range(len(s))):
        raise PreconditionError("partition does not cover the semigroup")
    table = []
    for p in classes:
        row = []
        for q in classes:
            targets = {cls_of[s.table[a][b]] for a in p for b in q}
            if len(targets) != 1:
                raise PreconditionError("partition is not a congruence")
            row.append(targets.pop())
        table.append(tuple(row))
    return FiniteSemigroup(tuple(classes), tuple(table), tuple(range(len(classes))))


# ---------------------------------------------------------------------------
# Green's relations


@dataclass(frozen=True)
class GreensStructure:
    """L/R/H partitions plus the egg-box grid per D-class.

    Partitions are tuples of sorted index tuples, ordered by smallest
    member.  `eggbox[d]` is a grid indexed [R-class][L-class] whose cells
    are H-classes; in a D-class every cell is non-empty.
    """

    l_classes: tuple[tuple[int, ...], ...]
    r_classes: tuple[tuple[int, ...], ...]
    h_classes: tuple[tuple[int, ...], ...]
    d_classes: tuple[tuple[int, ...], ...]
    eggbox: tuple  # per D-class: tuple of rows of H-class cells

    def l_class_of(self, a):
        return next(c for c in self.l_classes if a in c)

    def r_class_of(self, a):
        return next(c for c in self.r_classes if a in c)

    def h_class_of(self, a):
        return next(c for c in self.h_classes if a in c)


def _partition_by(keys):
    groups = defaultdict(list)
    for i, k in enumerate(keys):
        groups[k].append(i)
    classes = [tuple(sorted(v)) for v in groups.values()]
    classes.sort(key=lambda c: c[0])
    return tuple(classes)


def greens(s: FiniteSemigroup) -> GreensStructure:
    n = len(s)
    lkeys = [s.left_ideal_of(a) for a in range(n)]
    rkeys = [s.right_ideal_of(a) for a in range(n)]
    l_classes = _partition_by(lkeys)
    r_classes = _partition_by(rkeys)
    h_classes = _partition_by(list(zip(lkeys, rkeys)))

    # D = join of L and R: union-find over shared classes.
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for cls in list(l_classes) + list(r_classes):
        for other in cls[1:]:
            union(cls[0], other)
    d_classes = _partition_by([find(i) for i in range(n)])

    eggbox = []
    for d in d_classes:
        dset = set(d)
        rows = [r for r in r_classes if r[0] in dset]
        cols = [l for l in l_classes if l[0] in dset]
        grid = []
        for r in rows:
            row = []
            for l in cols:
                cell = tuple(sorted(set(r) & set(l)))
                if not cell:
                    raise ConsistencyError("empty egg-box cell inside a D-class")
                row.append(cell)
            grid.append(tuple(row))
        eggbox.append(tuple(grid))

    return GreensStructure(l_classes, r_classes, h_classes, d_classes, tuple(eggbox))


def h_class_is_group(s: FiniteSemigroup, h_class) -> bool:
    """An H-class is a group iff it contains an idempotent."""
    return any(s.table[x][x] == x for x in h_class)


# ---------------------------------------------------------------------------
# Idempotent order


@dataclass(frozen=True)
class IdempotentPoset:
    idempotents: tuple[int, ...]
    leq: frozenset[tuple[int, int]]  # (p, q) with p <= q, i.e. p = pq = qp
    minimal: tuple[int, ...]

    def is_minimal(self, p) -> bool:
        return p in set(self.minimal)


def idempotent_poset(s: FiniteSemigroup) -> IdempotentPoset:
    idem = s.idempotents
    leq = set()
    for p in idem:
        for q in idem:
            if s.table[p][q] == p and s.table[q][p] == p:
                leq.add((p, q))
    # Order axioms, checked because they are cheap and load-bearing.
    for p in idem:
        assert (p, p) in leq
    for (p, q) in leq:
        if (q, p) in leq and p != q:
            raise ConsistencyError("idempotent order not antisymmetric")
    for (p, q) in leq:
        for (q2, r) in leq:
            if q2 == q and (p, r) not in leq:
                raise ConsistencyError("idempotent order not transitive")
    minimal = tuple(
        p for p in idem
        if not any(q != p and (q, p) in leq for q in idem)
    )
    return IdempotentPoset(idem, frozenset(leq), minimal)


# ---------------------------------------------------------------------------
# Ideals and the kernel


@dataclass(frozen=True)
class KernelIdeals:
    kernel: frozenset[int]
    minimal_left: tuple[frozenset[int], ...]
    minimal_right: tuple[frozenset[int], ...]


def minimal_left_ideals(s: FiniteSemigroup) -> tuple[frozenset[int], ...]:
    principal = {s.left_ideal_of(a) for a in range(len(s))}
    minimal = [
        ideal for ideal in principal
        if not any(other < ideal for other in principal)
    ]
    return tuple(sorted(minimal, key=lambda f: sorted(f)))


def minimal_right_ideals(s: FiniteSemigroup) -> tuple[frozenset[int], ...]:
    principal = {s.right_ideal_of(a) for a in range(len(s))}
    minimal = [
        ideal for ideal in principal
        if not any(other < ideal for other in principal)
    ]
    return tuple(sorted(minimal, key=lambda f: sorted(f)))


def kernel(s: FiniteSemigroup) -> KernelIdeals:
    """The unique minimal two-sided ideal, with the minimal one-sided ideals.

    Asserts the finite structure facts: the kernel is contained in every
    principal two-sided ideal, equals the disjoint union of the minimal
    left ideals, and each minimal left ideal contains an idempotent.
    """
    principal = [s.two_sided_ideal_of(a) for a in range(len(s))]
    ker = min(principal, key=len)
    for ideal in principal:
        if not ker <= ideal:
            raise ConsistencyError("minimal two-sided ideal is not unique")

    min_left = minimal_left_ideals(s)
    min_right = minimal_right_ideals(s)

    covered = set()
    for ideal in min_left:
        if covered & ideal:
            raise ConsistencyError("minimal left ideals are not disjoint")
        covered |= ideal
        if not any(s.table[x][x] == x for x in ideal):
            raise ConsistencyError("minimal left ideal without idempotent")
    if covered != set(ker):
        raise ConsistencyError("kernel != union of minimal left ideals")
    return KernelIdeals(ker, min_left, min_right)


# ---------------------------------------------------------------------------
# Complete regularity


def completely_regular_witness(s: FiniteSemigroup, a: int):
    """Search x in S with a = a x a and a x = x a; None when absent.

    For transformation elements the two independent image criteria are
    cross-checked; any disagreement is a hard failure.
    """
    found = None
    for x in range(len(s)):
        ax = s.table[a][x]
        if s.table[ax][a] == a and ax == s.table[x][a]:
            found = x
            break
    elem = s.elements[a]
    if isinstance(elem, Transformation):
        bij = restriction_to_image_is_bijective(elem)
        stable = image_stable(elem)
        if bij != stable or bij != (found is not None):
            raise ConsistencyError(
                f"complete-regularity criteria disagree on {elem}: "
                f"witness={found is not None} bijective-on-image={bij} "
                f"image-stable={stable}"
            )
    return found


def is_completely_regular_element(s: FiniteSemigroup, a: int) -> bool:
    return completely_regular_witness(s, a) is not None


def normal_inverse(s: FiniteSemigroup, a: int):
    """The unique commuting generalised inverse of a, or None.

    Returns (inverse_index, a0_index) where a0 = a * a^-1.  The inverse is
    found by exhaustive search and checked unique; for transformations the
    restriction-to-image construction must agree.
    """
    candidates = [
        x for x in range(len(s))
        if s.table[s.table[a][x]][a] == a
        and s.table[s.table[x][a]][x] == x
        and s.table[a][x] == s.table[x][a]
    ]
    if not candidates:
        return None
    if len(candidates) > 1:
        raise ConsistencyError(
            f"element {a} has {len(candidates)} commuting generalised inverses"
        )
    inv = candidates[0]
    elem = s.elements[a]
    if isinstance(elem, Transformation):
        direct = restricted_inverse_square(elem)
        if direct is None or s.elements[inv] != direct:
            raise ConsistencyError(
                "table search and restriction construction disagree on the "
                f"normal inverse of {elem}"
            )
    a0 = s.table[a][inv]
    assert s.table[inv][a] == a0 and s.table[a0][a0] == a0
    return inv, a0


# ---------------------------------------------------------------------------
# Structure report


@dataclass(frozen=True)
class StructureReport:
    is_group: bool
    is_left_simple: bool
    is_simple: bool
    is_completely_simple: bool
    is_completely_regular: bool
    is_nearly_simple: bool | None  # None when S has no unit
    kernel: frozenset[int]
    minimal_left_ideals: tuple[frozenset[int], ...]
    minimal_right_ideals: tuple[frozenset[int], ...]
    units: frozenset[int]
    non_regular: tuple[int, ...]  # elements failing complete regularity


def structure_report(s: FiniteSemigroup) -> StructureReport:
    n = len(s)
    full = frozenset(range(n))
    ker = kernel(s)
    gr = greens(s)
    poset = idempotent_poset(s)

    left_simple = all(s.left_ideal_of(a) == full for a in range(n))
    simple = all(s.two_sided_ideal_of(a) == full for a in range(n))
    completely_simple = simple and any(
        poset.is_minimal(p) for p in poset.idempotents
    )

    non_regular = tuple(
        a for a in range(n) if completely_regular_witness(s, a) is None
    )
    cr_by_elements = not non_regular
    cr_by_h_classes = all(h_class_is_group(s, h) for h in gr.h_classes)
    if cr_by_elements != cr_by_h_classes:
        raise ConsistencyError(
            "element-wise and H-class complete-regularity tests disagree"
        )

    units = s.units()
    if s.has_unit:
        nearly_simple = units | ker.kernel == full
    else:
        nearly_simple = None

    return StructureReport(
        is_group=s.is_group(),
        is_left_simple=left_simple,
        is_simple=simple,
        is_completely_simple=completely_simple,
        is_completely_regular=cr_by_elements,
        is_nearly_simple=nearly_simple,
        kernel=ker.kernel,
        minimal_left_ideals=ker.minimal_left,
        minimal_right_ideals=ker.minimal_right,
        units=units,
        non_regular=non_regular,
    )
