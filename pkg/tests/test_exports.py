import pytest

from ellisem.errors import ParseError
from ellisem.exports import cayley_from_json, cayley_to_json, eggbox_dot
from ellisem.semigroup import closure, left_zero
from ellisem.transformation import Transformation, constant, identity


def test_json_round_trip_transformations():
    s = closure([identity(3), Transformation((0, 0, 1)), constant(3, 0)])
    t = cayley_from_json(cayley_to_json(s))
    assert t.elements == s.elements
    assert t.table == s.table
    assert t.generators == s.generators


def test_json_round_trip_opaque_labels():
    s = left_zero(("x", "y"))
    t = cayley_from_json(cayley_to_json(s))
    assert t.elements == s.elements and t.table == s.table


def test_json_rejects_garbage():
    with pytest.raises(ParseError):
        cayley_from_json("{not json")
    with pytest.raises(ParseError):
        cayley_from_json('{"elements": ["x"]}')


def test_eggbox_dot_structure():
    gens = [identity(3), Transformation((0, 0, 1))] + [
        constant(3, v) for v in range(3)
    ]
    s = closure(gens)
    dot = eggbox_dot(s, names=[e.word("abc") for e in s.elements])
    assert dot.startswith("digraph eggbox {")
    # Three D-classes: kernel, the collapsing map, the identity.
    assert dot.count("subgraph cluster_d") == 3
    # Groups shaded: id plus three constants, but not the collapsing map.
    assert dot.count("fillcolor=lightgray") == 4
    assert '"aab"' in dot and '"abc"' in dot
