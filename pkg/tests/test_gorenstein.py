import pytest
from hypothesis import given, settings, strategies as st

from tangentcone import Binomial, GeneratorTuple, apery_set, build_tables, is_symmetric
from tangentcone.binomials import same_set
from tangentcone.gorenstein import (apery_from_standard, apery_standard_monomials,
                                    detect_bresinsky, is_complete_intersection,
                                    verify_relations)
from tangentcone.gridcheck import grid_tuples
from tangentcone.toric import classify


def gdata(gens):
    g = GeneratorTuple.from_input(gens)
    return g, detect_bresinsky(g, classify(g).full_minimal_generators)


@pytest.mark.parametrize("gens,label,exponents", [
    ((1199, 2051, 2352, 3032), "1b",
     {"a1": 16, "a3": 16, "a32": 8, "a42": 11, "a14": 4, "a34": 7, "a13": 3}),
    ((627, 1546, 1662, 3377), "2a",
     {"a1": 18, "a2": 25, "a24": 8, "a34": 3, "a12": 3, "a13": 4, "a23": 7}),
    ((813, 1032, 1240, 1835), "2b",
     {"a2": 14, "a3": 16, "a13": 3, "a24": 3, "a34": 8, "a41": 5, "a32": 5, "a12": 9}),
])
def test_worked_examples(gens, label, exponents):
    g, d = gdata(gens)
    assert d.perm_case == label
    lab = d.labelled()
    assert {k: lab[k] for k in exponents} == exponents
    assert verify_relations(d, g)


def test_fifth_generator_of_shape_1b():
    _, d = gdata((1199, 2051, 2352, 3032))
    assert d.generators[4].key() == Binomial.parse("x1^7*x4^7 - x2^11*x3^3").key()


def test_non_gorenstein_is_rejected_with_reason():
    g = GeneratorTuple.from_input((49, 63, 65, 78))
    trace = []
    assert detect_bresinsky(g, classify(g).full_minimal_generators, trace) is None
    assert "11 minimal generators" in trace[0]


def test_complete_intersection_is_not_bresinsky():
    g = GeneratorTuple.from_input((30, 34, 42, 51))
    mg = classify(g).full_minimal_generators
    assert is_complete_intersection(g, mg)
    assert detect_bresinsky(g, mg) is None


def test_apery_avoidance_ideal_of_e41_member():
    g, d = gdata((10, 17, 22, 28))
    assert d.perm_case == "1a"
    assert len(apery_standard_monomials(d)) == 5
    assert apery_from_standard(d, g) == apery_set(g, build_tables(g))


# every shape found among small tuples, found by scanning n4 <= 30
SMALL = [t for t in grid_tuples(30)]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL))
def test_detected_shapes_are_symmetric_and_consistent(gens):
    g, d = gdata(gens)
    if d is None:
        return
    t = build_tables(g)
    assert is_symmetric(g, t)
    assert verify_relations(d, g)
    assert apery_from_standard(d, g) == apery_set(g, t)


def test_shapes_cover_all_six_cases_up_to_40():
    seen = set()
    for gens in grid_tuples(40, 5):
        _, d = gdata(gens)
        if d is not None:
            seen.add(d.perm_case)
        if len(seen) == 6:
            break
    assert seen == {"1a", "1b", "2a", "2b", "3a", "3b"}
