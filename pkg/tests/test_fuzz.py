"""Randomized consistency checks for the facts that are theorems of the
finite shadow itself (cf. the acceptance module for the stronger,
example-derived equivalence and its status)."""

from itertools import combinations

import pytest

from fuzzgen import qualifying_corpus

from ellisem.analysis import classify_system
from ellisem.pairs import BACKWARD, FORWARD
from ellisem.semigroup import kernel, structure_report, sub_semigroup


@pytest.fixture(scope="module")
def corpus():
    return qualifying_corpus(150)


def test_classify_system_internal_cross_checks_hold(corpus):
    cases, skips = corpus
    blind = visible = none = 0
    for subst, fib in cases:
        cls = classify_system(subst, witness_count=0, fib=fib)
        if cls.li_yorke_visible_in_shadow is None:
            none += 1
        elif cls.li_yorke_visible_in_shadow:
            visible += 1
        else:
            blind += 1
    # The corpus must exercise all three regimes.
    assert none > 0 and visible + blind > 0
    print(
        f"\nfuzz corpus: {len(cases)} qualifying (skips: {dict(skips)}); "
        f"no-Li-Yorke={none} visible={visible} blind={blind}"
    )


def test_non_regular_shadow_forces_li_yorke_pair(corpus):
    cases, _ = corpus
    for subst, fib in cases:
        cls = classify_system(subst, witness_count=0, fib=fib)
        if cls.fiber_report.non_regular:
            assert any(p.verdict == "li_yorke" for p in cls.pairs), (
                subst.alphabet,
                subst.rules,
            )


def test_almost_distal_forces_regular_nearly_simple_shadow(corpus):
    cases, _ = corpus
    for subst, fib in cases:
        cls = classify_system(subst, witness_count=0, fib=fib)
        if cls.forward_almost_distal and cls.backward_almost_distal:
            assert cls.fiber_report.is_completely_regular
            assert cls.fiber_report.is_nearly_simple is True


def test_proximality_two_routes_agree(corpus):
    # Pair-graph diagonality vs existence of a collapsing fiber element.
    cases, _ = corpus
    for subst, fib in cases:
        seeds = fib.seeds
        seed_idx = {s: i for i, s in enumerate(seeds)}
        cls = classify_system(subst, witness_count=0, fib=fib)
        for s, s2 in combinations(seeds, 2):
            graph = any(
                p.proximal for p in cls.pairs if set(p.pair) == {s, s2}
            )
            collapse = any(
                t.images[seed_idx[s]] == t.images[seed_idx[s2]]
                for t in fib.base.elements
            )
            assert graph == collapse


def test_base_kernel_is_union_of_directional_kernels(corpus):
    cases, _ = corpus
    for subst, fib in cases:
        m_plus = fib.directional_kernel(fib.forward)
        m_minus = fib.directional_kernel(fib.backward)
        assert m_plus | m_minus == kernel(fib.base).kernel


def test_directional_shadows_are_closed_in_base(corpus):
    cases, _ = corpus
    for subst, fib in cases:
        for indices in (fib.forward, fib.backward):
            sub = sub_semigroup(fib.base, indices)  # raises if not closed
            assert len(sub) == len(indices)


def test_window_consistency_on_random_corpus(corpus):
    from ellisem.fixedpoint import FixedPoint

    cases, _ = corpus
    for subst, fib in cases[:40]:
        for seed in fib.seeds:
            fp = FixedPoint(subst, seed)
            big = fp.window(3)
            small = fp.window(2)
            assert all(
                big.letter(m) == small.letter(m)
                for m in range(small.lo, small.hi + 1)
            )
            # Fixed-point recursion spot check.
            ell = subst.length
            for j in range(-15, 15):
                q, r = divmod(j + 1, ell)
                assert fp[j] == subst.rule(fp[q])[r]
