from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from tangentcone import Binomial, GeneratorTuple
from tangentcone.binomials import same_set
from tangentcone.toric import (a_values, classify, critical_ideal, ideals_agree,
                               is_indispensable, minimal_generators_fiber,
                               toric_generators_saturation)


def B(text):
    return Binomial.parse(text)


def naive_a(gens):
    """Least a with a*n_i in the semigroup of the other three."""
    out = []
    for i, n in enumerate(gens):
        rest = [m for j, m in enumerate(gens) if j != i]
        S = {0}
        a = 0
        while True:
            a += 1
            for m in range(max(S) + 1, a * n + 1):
                if any(m >= r and m - r in S for r in rest):
                    S.add(m)
            if a * n in S:
                out.append(a)
                break
    return tuple(out)


tuples = (st.lists(st.integers(3, 40), min_size=4, max_size=4, unique=True)
          .map(sorted).filter(lambda v: gcd(*v) == 1).map(tuple))


def test_five_generators_of_large_example():
    g = GeneratorTuple.from_input((1199, 2051, 2352, 3032))
    r = classify(g)
    expected = [B("x1^16 - x3^3*x4^4"), B("x2^19 - x1^7*x3^13"), B("x3^16 - x2^8*x4^7"),
                B("x4^11 - x1^9*x2^11"), B("x1^7*x4^7 - x2^11*x3^3")]
    assert same_set(r.full_minimal_generators, expected)
    assert r.case_label == "1"
    assert r.a_values == (16, 19, 16, 11)


def test_eleven_generators_with_I_and_R():
    g = GeneratorTuple.from_input((49, 63, 65, 78))
    r = classify(g)
    f = {k: B(s) for k, s in {
        1: "x1^9 - x2^7", 2: "x3^6 - x4^5", 3: "x1^2*x4^2 - x2^3*x3",
        4: "x1^3*x2^2 - x3^3*x4", 5: "x1^5*x4 - x2*x3^4", 6: "x1*x2^5 - x3^2*x4^3",
        7: "x1^5*x3^2 - x2*x4^4", 8: "x1^8*x2 - x3*x4^5", 9: "x1^2*x3^5 - x2^3*x4^3",
        10: "x1^7*x3 - x2^4*x4^2", 11: "x1^4*x3^4 - x2^6*x4"}.items()}
    assert r.case_label == "2b" and r.mu == 2
    assert r.a_values == (9, 7, 6, 5)
    assert same_set(r.full_minimal_generators, f.values())
    assert same_set(r.set_I, [f[k] for k in (3, 4, 5, 6, 7, 9, 10, 11)])
    assert same_set(r.set_R, [f[8]])
    assert all(is_indispensable(g, b) for b in r.set_I)


def test_three_generator_case():
    g = GeneratorTuple.from_input((30, 34, 42, 51))
    r = classify(g)
    assert r.case_label == "2a" and r.mu == 3
    assert len(r.full_minimal_generators) == 3
    assert r.set_I == [] and r.set_R == []


@pytest.mark.parametrize("gens,label,mu", [
    ((5, 6, 7, 8), "1", 4),
    ((6, 7, 8, 9), "4b", 3),
    ((10, 17, 22, 28), "1", 4),
])
def test_case_labels(gens, label, mu):
    r = classify(GeneratorTuple.from_input(gens))
    assert (r.case_label, r.mu) == (label, mu)
    assert len(r.critical_generators) == mu


def test_degenerate_tuple_is_flagged():
    r = classify(GeneratorTuple.from_input((2, 3, 4, 5)))
    assert r.degenerate
    assert any("a_i = 1" in a for a in r.anomalies)


def test_indispensable_checks():
    g = GeneratorTuple.from_input((10, 17, 22, 28))
    assert is_indispensable(g, B("x3^2 - x1*x2^2"))
    # degree 88 also contains x1*x2^2*x3^2, so this binomial is replaceable
    assert not is_indispensable(g, B("x3^4 - x1^2*x2^4"))
    with pytest.raises(ValueError):
        is_indispensable(g, B("x1^2 - x2"))


def test_critical_ideal_generators_are_critical():
    g = GeneratorTuple.from_input((49, 63, 65, 78))
    a = a_values(g)
    for b in critical_ideal(g):
        assert b.s_degree(g.gens) == sum(x * n for x, n in zip(b.minus, g.gens))
        pure = b.plus if sum(1 for x in b.plus if x) == 1 else b.minus
        i = next(k for k, x in enumerate(pure) if x)
        assert pure[i] == a[i]


@settings(max_examples=40, deadline=None)
@given(tuples)
def test_a_values_match_naive(gens):
    assert a_values(GeneratorTuple.from_input(gens)) == naive_a(gens)


@settings(max_examples=40, deadline=None)
@given(tuples)
def test_fiber_and_saturation_generate_the_same_ideal(gens):
    g = GeneratorTuple.from_input(gens)
    fib, _ = minimal_generators_fiber(g)
    sat = toric_generators_saturation(g)
    for b in fib:
        assert sum(x * n for x, n in zip(b.plus, gens)) == sum(x * n for x, n in zip(b.minus, gens))
    ok, why = ideals_agree(g, sat, fib)
    assert ok, why


@settings(max_examples=40, deadline=None)
@given(tuples)
def test_label_is_consistent_with_mu(gens):
    r = classify(GeneratorTuple.from_input(gens))
    assert r.mu == len(r.critical_generators)
    allowed = {"1": {4}, "4a": {4}, "4b": {3}, "2a": {3}, "2b": {2}, "3": None, "2c": None}
    assert r.case_label in allowed
    if allowed[r.case_label]:
        assert r.mu in allowed[r.case_label]
