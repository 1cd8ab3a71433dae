import pytest

from ellisem.errors import ParseError, PreconditionError
from ellisem.substitution import (
    Substitution,
    fixed_point_seeds,
    parse_substitution,
    parse_substitution_text,
)

PAPER_TEXT = """alphabet: a b c
rules:
a: a a c a a
b: a b c a a
c: a c c b a
"""


def test_parse_paper_text(paper):
    s = parse_substitution_text(PAPER_TEXT)
    assert s == paper
    assert s.length == 5
    assert s.is_primitive
    assert not s.is_bijective


def test_parse_compact_rule_words():
    s = parse_substitution_text("alphabet: a b c\nrules:\na: aacaa\nb: abcaa\nc: accba\n")
    assert s.rule("c") == ("a", "c", "c", "b", "a")


def test_parse_json_round_trip(paper):
    assert parse_substitution(paper.to_json()) == paper
    assert parse_substitution(paper.to_text()) == paper


def test_non_constant_length_rejected():
    with pytest.raises(ParseError, match="non-constant"):
        parse_substitution_text("alphabet: a b\nrules:\na: a b\nb: a\n")
    with pytest.raises(PreconditionError):
        Substitution(("a", "b"), (("a", "b"), ("a",)))


def test_unknown_symbol_has_line_number():
    with pytest.raises(ParseError) as err:
        parse_substitution_text("alphabet: a b\nrules:\na: a b\nb: a z\n")
    assert err.value.line == 4


def test_missing_rule_rejected():
    with pytest.raises(ParseError, match="missing rules"):
        parse_substitution_text("alphabet: a b\nrules:\na: a b\n")


def test_bijective_substitution(bijective):
    assert bijective.is_bijective
    assert bijective.length == 3
    # Columns are swap, id, swap.
    assert bijective.column(0) == ("b", "a")
    assert bijective.column(1) == ("a", "b")
    assert bijective.column(2) == ("b", "a")


def test_seeds_paper(paper):
    assert fixed_point_seeds(paper) == ("a", "b", "c")


def test_seeds_bijective(bijective):
    assert fixed_point_seeds(bijective) == ("a", "b")


def test_seeds_trivial(trivial):
    assert fixed_point_seeds(trivial) == ("a",)


def test_seeds_can_be_empty():
    s = Substitution(("a", "b"), (("b", "b", "a"), ("a", "a", "b")))
    assert fixed_point_seeds(s) == ()


def test_primitivity_flag():
    # Two disconnected letters: not primitive.
    s = Substitution(("a", "b"), (("a", "a"), ("b", "b")))
    assert not s.is_primitive


def test_two_block_language(paper):
    lang = paper.two_block_language
    assert ("a", "a") in lang and ("c", "c") in lang
    assert ("b", "b") not in lang  # bb never occurs in this substitution
