import pytest

from ellisem.errors import PreconditionError
from ellisem.fixedpoint import FixedPoint
from ellisem.pairs import BACKWARD, FORWARD, classify_pair


def test_forward_verdicts_paper(paper):
    assert classify_pair(paper, "a", "b", FORWARD).verdict == "asymptotic"
    assert classify_pair(paper, "a", "c", FORWARD).verdict == "li_yorke"
    assert classify_pair(paper, "b", "c", FORWARD).verdict == "li_yorke"


def test_backward_verdicts_paper(paper):
    for pair in (("a", "b"), ("a", "c"), ("b", "c")):
        p = classify_pair(paper, *pair, BACKWARD)
        assert p.verdict == "asymptotic"
        assert p.proximal and p.asymptotic


def test_bijective_pairs_are_distal(bijective):
    for direction in (FORWARD, BACKWARD):
        p = classify_pair(bijective, "a", "b", direction)
        assert p.verdict == "distal_pair"
        assert not p.proximal and not p.asymptotic


def test_same_seed_rejected(paper):
    with pytest.raises(PreconditionError):
        classify_pair(paper, "a", "a", FORWARD)


def test_non_seed_rejected(bijective):
    with pytest.raises(PreconditionError):
        classify_pair(bijective, "a", "z", FORWARD)


def test_witnesses_satisfy_the_li_yorke_pattern(paper):
    p = classify_pair(paper, "b", "c", FORWARD, witness_count=6)
    x, y = FixedPoint(paper, "b"), FixedPoint(paper, "c")
    prev_n, prev_big = 0, 0
    assert len(p.witnesses) == 6
    for k, (n, big) in enumerate(p.witnesses, start=1):
        assert n > prev_n and big > prev_big and big >= k
        assert x[n] != y[n]
        assert all(x[m] == y[m] for m in range(n + 1, n + big + 1))
        prev_n, prev_big = n, big


def test_backward_witnesses_read_leftward():
    from ellisem.substitution import Substitution

    s = Substitution(("a", "b", "c"), (("c", "b", "c"), ("a", "b", "a"), ("c", "c", "a")))
    p = classify_pair(s, "b", "c", BACKWARD, witness_count=4)
    assert p.verdict == "li_yorke"
    x, y = FixedPoint(s, "b"), FixedPoint(s, "c")
    for (n, big) in p.witnesses:
        assert x[-n] != y[-n]
        assert all(x[-m] == y[-m] for m in range(n + 1, n + big + 1))


def test_verdict_stable_under_horizon_increase(paper):
    small = classify_pair(paper, "a", "c", FORWARD, witness_count=3)
    large = classify_pair(paper, "a", "c", FORWARD, witness_count=3, horizon=5 ** 8)
    assert small.verdict == large.verdict == "li_yorke"
    assert small.witnesses == large.witnesses
    assert small.recurrent_pairs == large.recurrent_pairs


def test_threshold_reported_for_asymptotic(paper):
    p = classify_pair(paper, "a", "b", FORWARD)
    assert p.threshold == 0
    x, y = FixedPoint(paper, "a"), FixedPoint(paper, "b")
    assert all(x[m] == y[m] for m in range(1, 400))
