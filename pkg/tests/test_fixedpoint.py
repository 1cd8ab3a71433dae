import pytest

from ellisem.errors import PreconditionError
from ellisem.fixedpoint import FixedPoint, Window
from ellisem.substitution import Substitution


def test_windows_match_the_dot_anchored_iteration(paper):
    assert FixedPoint(paper, "a").rendered(1) == "a.acaa"
    assert FixedPoint(paper, "c").rendered(1) == "a.ccba"
    assert (
        FixedPoint(paper, "b").rendered(2) == "aacaaa.bcaaaccbaaacaaaacaa"
    )


def test_window_zero_is_the_seed_germ(paper):
    assert FixedPoint(paper, "b").rendered(0) == ".b"


def test_window_extension_consistency(paper, bijective):
    for subst, seeds in ((paper, "abc"), (bijective, "ab")):
        for seed in seeds:
            fp = FixedPoint(subst, seed)
            for k in range(4):
                small, big = fp.window(k), fp.window(k + 1)
                assert big.lo < small.lo and big.hi > small.hi
                for m in range(small.lo, small.hi + 1):
                    assert big.letter(m) == small.letter(m)


def test_fixed_point_identity(paper):
    # x[m * L^k] = c1^k(x[m]); column 1 of this substitution is the
    # identity, so x[m * 5^k] = x[m] for all sampled m and k.
    for seed in "abc":
        fp = FixedPoint(paper, seed)
        for m in range(-20, 21):
            for k in range(5):
                assert fp[m * 5 ** k] == fp[m]


def test_fixed_point_recursion_on_windows(paper):
    # x[j] = theta(x[q])[r] with j + 1 = 5q + r.
    fp = FixedPoint(paper, "c")
    for j in range(-100, 100):
        q, r = divmod(j + 1, 5)
        assert fp[j] == paper.rule(fp[q])[r]


def test_non_seed_rejected(paper):
    s = Substitution(("a", "b"), (("b", "a", "a"), ("a", "a", "b")))
    with pytest.raises(PreconditionError):
        FixedPoint(s, "b")  # rule(b)[1] = a


def test_length_two_single_letter(trivial):
    fp = FixedPoint(trivial, "a")
    assert fp[5] == "a" and fp[-5] == "a"


def test_length_two_ambiguous_right_tail_rejected():
    # Seed a; both b and c are admissible right extensions.
    s = Substitution(
        ("a", "b", "c"), (("c", "a"), ("b", "a"), ("c", "b"))
    )
    assert s.is_primitive
    with pytest.raises(PreconditionError, match="ambiguous"):
        FixedPoint(s, "a")


def test_length_two_nonexistent_right_tail_rejected():
    # No letter starts its own rule word, so no two-sided fixed point.
    s = Substitution(("a", "b"), (("b", "a"), ("a", "b")))
    with pytest.raises(PreconditionError, match="nonexistent"):
        FixedPoint(s, "a")


def test_length_two_determined_right_tail():
    # Period-doubling-like rules: the right tail is forced through 'b'.
    s = Substitution(("a", "b"), (("b", "a"), ("b", "a")))
    assert s.is_primitive
    fp = FixedPoint(s, "a")
    assert fp[-1] == "b" and fp[0] == "a" and fp[1] == "b" and fp[2] == "a"


def test_window_letter_bounds():
    w = Window(("x", "y"), -1)
    assert w.letter(-1) == "x" and w.letter(0) == "y"
    with pytest.raises(IndexError):
        w.letter(1)
    assert w.shifted(1).letter(-2) == "x"
