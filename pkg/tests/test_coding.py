import math

from ellisem.coding import agreement_radius, higher_block_coding, metric_distance
from ellisem.fixedpoint import FixedPoint


def test_radius_zero_is_identity_recoding(paper):
    w = FixedPoint(paper, "a").window(2)
    coded = higher_block_coding(w, 0)
    assert coded.lo == w.lo
    assert [b[0] for b in coded.word] == list(w.word)


def test_sliding_blocks(paper):
    w = FixedPoint(paper, "a").window(2)
    coded = higher_block_coding(w, 1)
    assert coded.lo == w.lo + 1 and coded.hi == w.hi - 1
    for m in range(coded.lo, coded.hi + 1):
        assert coded.letter(m) == (w.letter(m - 1), w.letter(m), w.letter(m + 1))


def test_recoding_commutes_with_shift(paper):
    w = FixedPoint(paper, "b").window(2)
    r = 1
    a = higher_block_coding(w.shifted(3), r)
    b = higher_block_coding(w, r).shifted(3)
    for m in range(max(a.lo, b.lo), min(a.hi, b.hi) + 1):
        assert a.letter(m) == b.letter(m)


def test_metric_agreement_duality(paper):
    x = FixedPoint(paper, "a").window(3)
    y = FixedPoint(paper, "c").window(3)
    for n in range(-30, 31):
        for big_n in range(0, 8):
            sx, sy = x.shifted(n), y.shifted(n)
            agree = all(
                x.letter(m) == y.letter(m) for m in range(n - big_n, n + big_n + 1)
            )
            assert (metric_distance(sx, sy) <= math.exp(-big_n)) == agree


def test_metric_basic_properties(paper):
    xa = FixedPoint(paper, "a").window(2)
    xb = FixedPoint(paper, "b").window(2)
    assert metric_distance(xa, xa) == 0.0
    # Differ exactly at the origin: radius -1, symmetric.
    assert agreement_radius(xa, xb) == agreement_radius(xb, xa) == -1
    assert metric_distance(xa, xb) == math.exp(1)
    # Two steps to the right the disagreement sits at |n| = 2.
    assert agreement_radius(xa.shifted(2), xb.shifted(2)) == 1
    assert metric_distance(xa.shifted(2), xb.shifted(2)) == math.exp(-1)


def test_li_yorke_pattern_survives_recoding(paper):
    # Disagreement positions only grow under sliding-block recoding and
    # agreement runs shrink by at most 2r, so the witness pattern persists.
    r = 1
    x = FixedPoint(paper, "a").covering_window(-2000, 2000)
    y = FixedPoint(paper, "c").covering_window(-2000, 2000)
    cx, cy = higher_block_coding(x, r), higher_block_coding(y, r)
    witnesses = []
    m, prev_big = 1, 0
    while m < 1500 and len(witnesses) < 5:
        if cx.letter(m) != cy.letter(m):
            run = 0
            while m + run + 1 <= 1500 and cx.letter(m + run + 1) == cy.letter(m + run + 1):
                run += 1
            target = max(len(witnesses) + 1, prev_big + 1)
            if run >= target:
                witnesses.append((m, target))
                prev_big = target
            m += run + 1
        else:
            m += 1
    assert len(witnesses) == 5
