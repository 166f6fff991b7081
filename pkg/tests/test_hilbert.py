import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tangentcone.binomials import parse_mono as pm
from tangentcone.families import e43_numerator
from tangentcone.hilbert import (ONE_MINUS_T, IntPolynomial, MonomialIdeal, colon_by_monomial,
                                 hf_values, inclusion_exclusion_numerator, is_nondecreasing,
                                 numerator, numerator_peeling, reduced_numerator,
                                 series_coefficients)


def I(*texts):
    return MonomialIdeal.of(pm(t) for t in texts)


def naive_hf(gens, horizon):
    out = []
    for d in range(horizon + 1):
        c = 0
        for u in itertools.product(range(d + 1), repeat=4):
            if sum(u) == d and not any(all(a <= b for a, b in zip(g, u)) for g in gens):
                c += 1
        out.append(c)
    return out


def e43_ideal(m):
    return I("x2*x3", "x3^2", "x1*x4", "x3*x4", "x4^2", f"x2^{m}*x4", f"x1^{m + 2}*x3",
             f"x2^{2 * m + 1}")


monos = st.tuples(*[st.integers(0, 3)] * 4).filter(any)
ideals = st.lists(monos, min_size=1, max_size=7).map(MonomialIdeal.of)


def test_polynomial_arithmetic():
    p = IntPolynomial((1, 3, 1))
    assert str(p) == "1 + 3t + t^2"
    assert (p * ONE_MINUS_T).divide_one_minus_t() == p
    assert str(IntPolynomial((0, -1, 0, 2))) == "-t + 2t^3"
    with pytest.raises(ValueError):
        p.divide_one_minus_t()
    assert p(1) == 5


def test_minimalize_drops_multiples():
    J = I("x1^2", "x1^3*x2", "x2*x3", "x1^2*x4")
    assert set(J.gens) == {(2, 0, 0, 0), (0, 1, 1, 0)}


def test_principal_and_complete_intersection():
    assert numerator(I("x1")) == IntPolynomial((1, -1))
    # two coprime squares: (1 - t^2)^2
    assert numerator(I("x1^2", "x2^2")) == IntPolynomial((1, 0, -2, 0, 1))


def test_colon():
    assert colon_by_monomial(I("x1^2*x2", "x3^2"), pm("x1*x3")) == I("x1*x2", "x3")


@pytest.mark.parametrize("m", range(4, 11))
def test_three_term_family_closed_form(m):
    J = e43_ideal(m)
    h = reduced_numerator(J, 1)
    assert h == e43_numerator(m)
    assert h(1) == 2 * m + 1
    assert all(c >= 0 for c in h.coefficients)
    assert is_nondecreasing(J) == (True, "nonnegative numerator")


@pytest.mark.parametrize("m", range(4, 9))
def test_colon_walk(m):
    J0 = e43_ideal(m)
    walk = [pm("x2*x3"), pm("x1*x4"), pm("x3*x4")]
    J1 = MonomialIdeal.of(u for u in J0.gens if u != walk[0])
    J2 = MonomialIdeal.of(u for u in J1.gens if u != walk[1])
    J3 = MonomialIdeal.of(u for u in J2.gens if u != walk[2])
    assert colon_by_monomial(J1, walk[0]) == I("x3", "x4", f"x1^{m + 2}", f"x2^{2 * m}")
    assert colon_by_monomial(J2, walk[1]) == I("x3", "x4", f"x2^{m}")
    assert colon_by_monomial(J3, walk[2]) == I("x3", "x4", f"x1^{m + 2}", f"x2^{m}")
    tail = {0: 1, **{k: 2 for k in range(1, m + 1)}, **{k: 1 for k in range(m + 1, 2 * m + 1)}}
    expected_j3 = ONE_MINUS_T ** 3 * IntPolynomial.from_terms({0: 1, 1: 1, m + 3: -1}) \
        * IntPolynomial.from_terms(tail)
    assert numerator(J3) == expected_j3
    assert numerator_peeling(J0, walk) == numerator(J0)


def test_decreasing_hilbert_function_detected():
    # <x1, x2, x3, x4> * <x2, x3, x4>: only powers of x1 survive past degree 1
    J = I("x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4", "x4^2")
    assert hf_values(J, 5) == [1, 4, 1, 1, 1, 1] == naive_hf(J.gens, 5)
    assert reduced_numerator(J, 1) == IntPolynomial((1, 3, -3))
    assert is_nondecreasing(J) == (False, "HF(2) = 1 < HF(1) = 4")


@settings(max_examples=80, deadline=None)
@given(ideals)
def test_recursion_equals_inclusion_exclusion(J):
    assert numerator(J) == inclusion_exclusion_numerator(J)


@settings(max_examples=60, deadline=None)
@given(ideals)
def test_series_matches_direct_count(J):
    assert series_coefficients(numerator(J), 4, 8) == naive_hf(J.gens, 8)
    assert hf_values(J, 8) == naive_hf(J.gens, 8)


@settings(max_examples=40, deadline=None)
@given(ideals, st.lists(st.integers(0, 6), min_size=1, max_size=3))
def test_peel_order_does_not_matter(J, picks):
    order = []
    for k in picks:
        u = J.gens[k % len(J.gens)]
        if u not in order:
            order.append(u)
    assert numerator_peeling(J, order) == numerator(J)
