"""The fiber shadow of the Ellis semigroup of a substitution subshift.

Restricted to the distinguished fiber (the shift-substitute fixed
points), every limit of shift powers sigma^(m L^k), k -> infinity, acts
as  s |-> e(x_s[m])  where e runs over the eventual cycle of powers of
c1, the column-1 map of the rule block (c1 fixes exactly the seeds).
The computable shadow is therefore the semigroup generated by the
recurring columns composed with that cycle, together with the identity;
elements are Transformations of the seed set.

Composing a recurring column with c1 is the same as reading the column
at L times the position, so the cycle composition adds nothing beyond
what recurs already; it matters only in making the generators
seed-valued.  When even the cycle-composed columns take values on a
non-fixed periodic c1-orbit, the shadow is not a transformation
semigroup of the seed set and we refuse to guess (ShadowUndefinedError).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConsistencyError,
    KernelModelUnavailable,
    PreconditionError,
    ShadowUndefinedError,
)
from .columns import ColumnMap, occurring_columns, recurrent_tuples
from .rees import ReesDecomposition, rees_decompose
from .semigroup import (
    FiniteSemigroup,
    StructureReport,
    closure,
    cyclic_group,
    kernel,
    left_zero,
    product_semigroup,
    structure_report,
    sub_semigroup,
)
from .substitution import Substitution, fixed_point_seeds
from .transformation import Transformation, identity


def first_column_cycle(subst: Substitution) -> tuple[Transformation, ...]:
    """The eventual cycle of powers {c1^k : k large}, as maps on the alphabet."""
    idx = subst._letter_index
    c1 = Transformation(tuple(idx[w[1]] for w in subst.rules))
    trajectory = []
    seen = {}
    p = c1
    while p not in seen:
        seen[p] = len(trajectory)
        trajectory.append(p)
        p = p * c1
    return tuple(trajectory[seen[p]:])


@dataclass(frozen=True)
class FiberSemigroup:
    subst: Substitution
    seeds: tuple[str, ...]
    base: FiniteSemigroup  # Transformations on seed indices; always contains id
    forward: tuple[int, ...]  # base indices of the positive-side shadow
    backward: tuple[int, ...]
    identity_index: int
    identity_recurs: bool  # the identity column recurs (vs only m = 0)

    def words(self) -> tuple[str, ...]:
        return tuple(t.word(self.seeds) for t in self.base.elements)

    def word(self, index: int) -> str:
        return self.base.elements[index].word(self.seeds)

    def directional_sub(self, indices) -> FiniteSemigroup:
        return sub_semigroup(self.base, indices)

    def directional_kernel(self, indices) -> frozenset[int]:
        """Kernel of a directional shadow, as a set of base indices."""
        indices = sorted(indices)
        sub = sub_semigroup(self.base, indices)
        ker = kernel(sub).kernel
        return frozenset(indices[k] for k in ker)


def _seed_transformation(subst, seeds, cycle_map, column, seed_index):
    values = tuple(
        subst.alphabet[cycle_map.images[subst._letter_index[v]]]
        for v in column.values
    )
    bad = sorted({v for v in values if v not in seed_index})
    if bad:
        raise ShadowUndefinedError(
            f"column at position {column.position} composed with a recurrent "
            f"power of the first-column map takes non-seed values {bad}; the "
            "shadow involves periodic non-fixed fiber points and is outside "
            "the seed-set model"
        )
    return Transformation(tuple(seed_index[v] for v in values))


def _directional_generators(subst, seeds, cycle, side, seed_index):
    columns = [
        ColumnMap(tuple(seeds), values, pos)
        for values, pos in sorted(recurrent_tuples(subst, seeds, side).items())
    ]
    gens = set()
    for col in columns:
        for e in cycle:
            gens.add(_seed_transformation(subst, seeds, e, col, seed_index))
    return gens


def build_fiber_semigroup(subst: Substitution) -> FiberSemigroup:
    """Closure of the recurring columns (cycle-composed) plus the identity."""
    seeds = fixed_point_seeds(subst)
    if not seeds:
        raise PreconditionError("substitution has no fixed-point seeds")
    seed_index = {s: i for i, s in enumerate(seeds)}
    cycle = first_column_cycle(subst)

    fwd = _directional_generators(subst, seeds, cycle, "positive", seed_index)
    bwd = _directional_generators(subst, seeds, cycle, "negative", seed_index)
    ident = identity(len(seeds))
    base = closure(sorted(fwd | bwd | {ident}))

    # Both sides of any fixed point are infinite, so both shadows are non-empty.
    fwd_closure = closure(sorted(fwd))
    bwd_closure = closure(sorted(bwd))
    fwd_idx = tuple(sorted(base.index(t) for t in fwd_closure.elements))
    bwd_idx = tuple(sorted(base.index(t) for t in bwd_closure.elements))

    return FiberSemigroup(
        subst=subst,
        seeds=seeds,
        base=base,
        forward=fwd_idx,
        backward=bwd_idx,
        identity_index=base.index(ident),
        identity_recurs=ident in fwd or ident in bwd,
    )


def directional_shadows(fib: FiberSemigroup):
    """(forward shadow, backward shadow) as base index tuples."""
    return fib.forward, fib.backward


def cayley_of_fiber(subst: Substitution):
    """(element words, full multiplication table) of the fiber semigroup."""
    fib = build_fiber_semigroup(subst)
    return fib.words(), fib.base.table


def fiber_columns(subst: Substitution, side="all"):
    """The occurring columns over the seed set (see columns module)."""
    return occurring_columns(subst, fixed_point_seeds(subst), side)


# ---------------------------------------------------------------------------
# Explicit kernel model


@dataclass(frozen=True)
class KernelModel:
    labels: tuple[str, ...]  # seed letters of the left-zero fiber kernel
    base_length: int  # L
    depth: int  # K
    product: FiniteSemigroup  # LZ_r x Z/L^K, explicit table
    report: StructureReport
    rees: ReesDecomposition


MODEL_SIZE_CAP = 160


def kernel_model(subst: Substitution, depth: int, fib: FiberSemigroup | None = None) -> KernelModel:
    """The explicit product LZ_r x Z/L^K modelling the kernel.

    Declines (KernelModelUnavailable) unless the fiber kernel is a
    left-zero semigroup of constant maps, which is the regime where the
    kernel of the full Ellis semigroup is the direct product of the
    fiber kernel with the truncated odometer.
    """
    if depth < 0:
        raise PreconditionError("depth must be >= 0")
    if fib is None:
        fib = build_fiber_semigroup(subst)
    ker = kernel(fib.base).kernel
    ker_elements = [fib.base.elements[i] for i in sorted(ker)]
    if not all(t.is_constant() for t in ker_elements):
        words = [t.word(fib.seeds) for t in ker_elements]
        raise KernelModelUnavailable(
            f"fiber kernel {words} is not a left-zero semigroup of constants"
        )
    for t in ker_elements:
        for u in ker_elements:
            if t * u != t:
                raise ConsistencyError("constant maps failed the left-zero law")
    labels = tuple(fib.seeds[t.images[0]] for t in ker_elements)

    modulus = subst.length ** depth
    if len(labels) * modulus > MODEL_SIZE_CAP:
        raise PreconditionError(
            f"kernel model with {len(labels)}*{modulus} elements exceeds the "
            f"materialisation cap {MODEL_SIZE_CAP}; lower the depth"
        )
    product = product_semigroup(left_zero(labels), cyclic_group(modulus))
    report = structure_report(product)
    if not report.is_completely_simple:
        raise ConsistencyError("kernel model is not completely simple")
    dec = rees_decompose(product)
    if (
        dec.data.i_size != len(labels)
        or dec.data.lambda_size != 1
        or len(dec.data.group) != modulus
        or not _is_cyclic(dec.data.group)
    ):
        raise ConsistencyError(
            "kernel model Rees data is not (Z/L^K, r rows, 1 column)"
        )
    return KernelModel(labels, subst.length, depth, product, report, dec)


def _is_cyclic(group: FiniteSemigroup) -> bool:
    n = len(group)
    for a in range(n):
        x, count = a, 1
        while x != group.identity_index and count <= n:
            x = group.table[x][a]
            count += 1
        if x == group.identity_index and count == n:
            return True
    return n == 1
