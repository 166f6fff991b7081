import itertools
import time
from functools import lru_cache
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from tangentcone import (BudgetExceeded, GeneratorTuple, InvariantViolation, PreconditionError,
                         build_tables)
from tangentcone import cmcheck
from tangentcone.cmcheck import (appendix_predicates, certificate_holds, closed_form_criterion,
                                 decide, good_monomial, herzog_oracle)
from tangentcone.gorenstein import detect_bresinsky
from tangentcone.toric import classify


def naive_cm(gens):
    """Brute-force form of the tangent cone criterion on the reduced box."""
    n1 = gens[0]
    box = [n1 // gcd(n1, n) for n in gens[1:]]
    top = sum((b - 1) * n for b, n in zip(box, gens[1:]))

    @lru_cache(maxsize=None)
    def longest(m):
        # longest factorization of m, None when m is not in S
        if m == 0:
            return 0
        opts = [longest(m - n) for n in gens if n <= m]
        opts = [x for x in opts if x is not None]
        return max(opts) + 1 if opts else None

    for m in range(top + 1):
        longest(m)
    for v in itertools.product(*(range(b) for b in box)):
        m = sum(x * n for x, n in zip(v, gens[1:]))
        rest = longest(m - n1) if m >= n1 else None
        if rest is not None and sum(v) > rest + 1:
            return False
    return True


small = (st.lists(st.integers(3, 30), min_size=4, max_size=4, unique=True)
         .map(sorted).filter(lambda v: gcd(*v) == 1).map(tuple))


def setup(gens):
    g = GeneratorTuple.from_input(gens)
    t = build_tables(g)
    r = classify(g, t)
    return g, t, r, detect_bresinsky(g, r.full_minimal_generators)


@settings(max_examples=60, deadline=None)
@given(small)
def test_oracle_matches_brute_force(gens):
    g = GeneratorTuple.from_input(gens)
    assert herzog_oracle(g).is_cm == naive_cm(gens)


@settings(max_examples=60, deadline=None)
@given(small)
def test_fast_paths_never_contradict_oracle(gens):
    g, t, r, d = setup(gens)
    v = decide(g, t, r, d)
    for c in v.checks:
        assert c["is_cm"] == v.is_cm


def test_large_example_closed_form():
    g, t, r, d = setup((1199, 2051, 2352, 3032))
    start = time.perf_counter()
    v = closed_form_criterion(d)
    assert time.perf_counter() - start < 1
    assert v.is_cm is True and v.method == "closed_form(1b)"
    joined = " | ".join(v.trace)
    for piece in ("19 <= 20", "14 <= 14", "19 <= 27"):
        assert piece in joined


def test_shape_2a_inequality_in_trace():
    _, _, _, d = setup((627, 1546, 1662, 3377))
    v = closed_form_criterion(d)
    assert v.is_cm is True
    assert any("28 <= 29" in line for line in v.trace)


def test_shape_2b_inequality_in_trace():
    _, _, _, d = setup((813, 1032, 1240, 1835))
    v = closed_form_criterion(d)
    assert v.is_cm is True
    assert any("19 <= 20" in line for line in v.trace)


def test_not_cm_has_checkable_certificate():
    g, t, r, d = setup((9, 11, 34, 35))
    v = decide(g, t, r, d)
    assert v.is_cm is False
    assert v.certificate == {"v": [4, 0, 0], "m": 44, "bound": 2}
    assert certificate_holds(g, v.certificate)
    assert closed_form_criterion(d).is_cm is False


def test_appendix_examples():
    for gens in ((30, 34, 42, 51), (49, 63, 65, 78)):
        g, t, r, _ = setup(gens)
        v = appendix_predicates(r, g, t)
        assert v.is_cm is True
        assert v.method == f"appendix_predicate({r.case_label})"
        assert herzog_oracle(g, t).is_cm is True


def test_good_monomial():
    g = GeneratorTuple.from_input((9, 11, 34, 35))
    t = build_tables(g)
    # 44 = 9 + 35 is the only way to use x1: length 2 < 4
    assert not good_monomial(g, t, (4, 0, 0))
    # 45 = 5 * 9
    assert good_monomial(g, t, (1, 1, 0))
    with pytest.raises(PreconditionError):
        good_monomial(g, t, (1, 0, 0))


def test_disagreement_raises(monkeypatch):
    g, t, r, d = setup((9, 11, 34, 35))
    liar = cmcheck.CMVerdict(True, "rigged", None, [])
    monkeypatch.setattr(cmcheck, "fast_paths", lambda *a: [liar])
    with pytest.raises(InvariantViolation, match="rigged"):
        decide(g, t, r, d)


def test_skip_oracle_returns_fast_verdict_or_undecided():
    g, t, r, d = setup((9, 11, 34, 35))
    assert decide(g, t, r, d, run_oracle=False).method == "closed_form(2b)"
    g, t, r, d = setup((5, 6, 7, 9))
    v = decide(g, t, r, d, run_oracle=False)
    assert v.is_cm is None and v.method == "undecided"
    assert decide(g, t, r, d).method == "herzog_oracle"


def test_oracle_timeout():
    g = GeneratorTuple.from_input((1199, 2051, 2352, 3032))
    with pytest.raises(BudgetExceeded):
        herzog_oracle(g, timeout=0.0)
