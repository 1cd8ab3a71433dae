import pytest

from ellisem.errors import (
    KernelModelUnavailable,
    PreconditionError,
    ShadowUndefinedError,
)
from ellisem.fiber import (
    build_fiber_semigroup,
    cayley_of_fiber,
    first_column_cycle,
    kernel_model,
)
from ellisem.semigroup import kernel, structure_report
from ellisem.substitution import Substitution
from ellisem.transformation import identity


def test_fiber_paper(paper):
    fib = build_fiber_semigroup(paper)
    assert set(fib.words()) == {"abc", "aaa", "bbb", "ccc", "aab"}
    assert fib.word(fib.identity_index) == "abc"
    assert not fib.identity_recurs  # identity column occurs only at m = 0


def test_fiber_bijective_is_a_group(bijective):
    fib = build_fiber_semigroup(bijective)
    assert set(fib.words()) == {"ab", "ba"}
    assert structure_report(fib.base).is_group
    assert fib.identity_recurs


def test_fiber_trivial(trivial):
    fib = build_fiber_semigroup(trivial)
    assert fib.base.elements == (identity(1),)


def test_fiber_product_relations(paper):
    words, table = cayley_of_fiber(paper)
    idx = {w: i for i, w in enumerate(words)}
    mul = lambda x, y: words[table[idx[x]][idx[y]]]
    assert mul("aab", "aab") == "aaa"
    assert mul("aab", "ccc") == "bbb"
    assert mul("ccc", "aab") == "ccc"


def test_first_column_cycle(paper, bijective):
    assert first_column_cycle(paper) == (identity(3),)
    assert first_column_cycle(bijective) == (identity(2),)
    # A non-trivial idempotent tail: c1 = (a->a, b->a) for these rules.
    s = Substitution(("a", "b"), (("b", "a", "a"), ("b", "a", "b")))
    (e,) = first_column_cycle(s)
    assert e.images == (0, 0)


def test_directional_shadows_paper(paper):
    fib = build_fiber_semigroup(paper)
    fwd = {fib.word(i) for i in fib.forward}
    bwd = {fib.word(i) for i in fib.backward}
    assert fwd == {"aaa", "bbb", "ccc", "aab"}
    assert bwd == {"aaa", "bbb", "ccc"}
    assert "aab" not in bwd  # the collapsing map arises forward only


def test_no_seeds_is_an_error():
    s = Substitution(("a", "b"), (("b", "b", "a"), ("a", "a", "b")))
    with pytest.raises(PreconditionError, match="no fixed-point seeds"):
        build_fiber_semigroup(s)


def test_shadow_undefined_when_columns_leave_the_seed_orbit():
    # Seeds {a}; column 1 swaps b and c, so recurring columns composed
    # with the cycle of its powers still reach the period-2 letters.
    s = Substitution(
        ("a", "b", "c"),
        (("a", "a", "b"), ("b", "c", "c"), ("c", "b", "a")),
    )
    assert s.is_primitive
    with pytest.raises(ShadowUndefinedError):
        build_fiber_semigroup(s)


def test_kernel_model_paper_depth2(paper):
    model = kernel_model(paper, 2)
    assert len(model.product) == 75
    assert model.report.is_completely_simple
    assert len(model.rees.data.group) == 25
    assert model.rees.data.i_size == 3
    assert model.rees.data.lambda_size == 1
    # One minimal left ideal: the whole product is a single L-class.
    assert len(model.report.minimal_left_ideals) == 1
    assert len(model.report.minimal_right_ideals) == 3


def test_kernel_model_depth0_is_the_fiber_kernel(paper):
    model = kernel_model(paper, 0)
    assert len(model.product) == 3
    assert structure_report(model.product).is_left_simple


def test_kernel_model_declines_for_bijective(bijective):
    with pytest.raises(KernelModelUnavailable):
        kernel_model(bijective, 2)


def test_kernel_model_depth_cap(paper):
    with pytest.raises(PreconditionError, match="cap"):
        kernel_model(paper, 4)


def test_directional_kernels_paper(paper):
    fib = build_fiber_semigroup(paper)
    m_plus = fib.directional_kernel(fib.forward)
    m_minus = fib.directional_kernel(fib.backward)
    assert m_plus == m_minus == kernel(fib.base).kernel
