from ellisem.oracle import (
    closure_corpus,
    cr_count_formula,
    enumerate_transformations,
    rees_instances,
    run_suites,
    verify_cpreg_criterion,
    verify_kernel_structure,
    verify_left_simple_dichotomy,
    verify_rees_roundtrip,
    verify_union_of_groups,
)

import pytest


def test_enumerate_bounds():
    assert len(list(enumerate_transformations(2))) == 4
    with pytest.raises(ValueError):
        list(enumerate_transformations(5))


def test_cpreg_suite_counts():
    report = verify_cpreg_criterion(4)
    assert report.ok, report.failures
    assert report.instances == 1 + 4 + 27 + 256
    # Counts frozen after the first oracle run; degree 2 has all four maps
    # completely regular, degree 4 has 148 of 256.
    assert report.counts == {
        "regular_degree_1": 1,
        "regular_degree_2": 4,
        "regular_degree_3": 21,
        "regular_degree_4": 148,
    }
    assert cr_count_formula(4) == 148


def test_corpus_shape():
    sizes = [len(s) for s in closure_corpus(2, degree4_samples=0)]
    # Degree 1: one closure; degree 2: 4 singles + 6 pairs.
    assert len(sizes) == 11


def test_kernel_suite():
    report = verify_kernel_structure(degree4_samples=6)
    assert report.ok, report.failures
    assert report.instances == 1 + 10 + (27 + 351) + 6


def test_union_suite():
    report = verify_union_of_groups(degree4_samples=6)
    assert report.ok, report.failures


def test_rees_suite():
    report = verify_rees_roundtrip()
    assert report.ok, report.failures
    # 9 trivial-group shapes + every Z2 matrix + seeded Z3 sample.
    assert report.instances == 9 + 682 + 67


def test_rees_instances_cover_all_z2_matrices():
    seen = sum(1 for d, _ in rees_instances() if len(d.group) == 2)
    assert seen == sum(2 ** (i * l) for i in (1, 2, 3) for l in (1, 2, 3))


def test_dichotomy_suite():
    report = verify_left_simple_dichotomy()
    assert report.ok, report.failures
    assert report.counts["covering_pairs"] > 100


def test_run_suites_filters_kwargs():
    reports = run_suites(["cpreg", "dichotomy"], max_degree=3, z3_samples=2)
    assert [r.suite for r in reports] == ["cpreg", "dichotomy"]
    assert all(r.ok for r in reports)
