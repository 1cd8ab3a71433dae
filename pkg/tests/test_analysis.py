import pytest

from ellisem.analysis import (
    classify_system,
    full_model_report,
    li_yorke_witness_map,
)
from ellisem.errors import PreconditionError, ShadowBlindSpotError
from ellisem.substitution import Substitution


def test_classify_paper(paper):
    cls = classify_system(paper)
    assert cls.backward_almost_distal and not cls.forward_almost_distal
    assert not cls.predicted_completely_regular
    assert not cls.predicted_nearly_simple
    assert cls.non_regular_witness == "aab"
    assert cls.li_yorke_visible_in_shadow is True
    assert cls.proximality_transitive
    assert cls.forward_proximality_transitive
    assert cls.backward_proximality_transitive
    assert cls.minimal_left_ideal_prediction == 1
    assert cls.directional_kernels_equal
    assert set(cls.proximal_pairs) == {("a", "b"), ("a", "c"), ("b", "c")}


def test_classify_bijective(bijective):
    cls = classify_system(bijective)
    assert cls.forward_almost_distal and cls.backward_almost_distal
    assert cls.predicted_nearly_simple and cls.predicted_completely_regular
    assert cls.fiber_report.is_completely_regular
    assert cls.fiber_report.is_nearly_simple
    assert cls.non_regular_witness is None
    assert cls.li_yorke_visible_in_shadow is None
    assert cls.proximal_pairs == ()


def test_classify_records_the_shadow_blind_spot():
    s = Substitution(("a", "b", "c"), (("c", "b", "c"), ("a", "b", "a"), ("c", "c", "a")))
    cls = classify_system(s, witness_count=0)
    assert not cls.backward_almost_distal  # backward Li-Yorke pair
    assert not cls.predicted_completely_regular  # prediction for the full system
    assert cls.fiber_report.is_completely_regular  # but the shadow is regular
    assert cls.li_yorke_visible_in_shadow is False
    assert cls.non_regular_witness is None


def test_witness_map_paper(paper):
    for pair in (("b", "c"), ("a", "c")):
        w = li_yorke_witness_map(paper, *pair)
        assert w.map_word == "aab"
        assert w.image_pair in {("a", "b"), ("b", "a")}
        assert w.image_of_map == ("a", "b")
        assert w.image_of_square == ("a",)


def test_witness_map_rejects_asymptotic_pair(paper):
    with pytest.raises(PreconditionError):
        li_yorke_witness_map(paper, "a", "b")


def test_witness_map_blind_spot_raises():
    s = Substitution(("a", "b", "c"), (("b", "c", "c", "c"), ("a", "b", "b", "a"), ("b", "c", "c", "b")))
    # (b, c) is forward Li-Yorke but every separating fiber element maps
    # it back onto itself, which is not asymptotic.
    with pytest.raises(ShadowBlindSpotError):
        li_yorke_witness_map(s, "b", "c")


def test_strata_paper(paper):
    doc = full_model_report(paper, depth=2)
    assert doc["stratum_count"] == 3
    names = [s["name"] for s in doc["strata"]]
    assert names == ["shift_powers", "kernel", "intermediate"]
    inter = doc["strata"][2]
    assert inter["maps"] == ["aab"]
    assert inter["size"] == 25
    assert inter["products_fall_into_kernel"] is True
    assert doc["strata"][1]["model"]["size"] == 75
    assert doc["minimality_note"] is None


def test_strata_bijective(bijective):
    doc = full_model_report(bijective, depth=2)
    assert doc["stratum_count"] == 2
    assert [s["name"] for s in doc["strata"]] == ["shift_powers", "kernel"]
    assert doc["strata"][1]["model"] is None
    assert "declined" in doc["strata"][1]
    assert doc["nearly_simple_predicted"]


def test_strata_trivial(trivial):
    doc = full_model_report(trivial, depth=2)
    assert doc["stratum_count"] == 1
    assert doc["strata"][0]["name"] == "shift_powers"


def test_non_primitive_is_flagged():
    s = Substitution(
        ("a", "b"), (("a", "a", "a"), ("b", "b", "a"))
    )
    assert not s.is_primitive
    doc = full_model_report(s, depth=1)
    assert doc["minimality_note"] is not None
