"""End-to-end acceptance checks; a summary line per criterion is printed at the end."""

import os
import time

import pytest

from tangentcone import Binomial, GeneratorTuple, build_tables
from tangentcone.binomials import same_set
from tangentcone.cmcheck import appendix_predicates, closed_form_criterion, herzog_oracle
from tangentcone.families import FamilySpec, verify_member
from tangentcone.gorenstein import detect_bresinsky
from tangentcone.grobner import verify_prop_lexinf
from tangentcone.gridcheck import run_grid
from tangentcone.toric import classify

B = Binomial.parse
LARGE = (1199, 2051, 2352, 3032)
SHAPE_2A = (627, 1546, 1662, 3377)
SHAPE_2B = (813, 1032, 1240, 1835)


def both_paths(gens):
    g = GeneratorTuple.from_input(gens)
    t = build_tables(g)
    r = classify(g, t)
    d = detect_bresinsky(g, r.full_minimal_generators)
    t0 = time.perf_counter()
    fast = closed_form_criterion(d)
    t_fast = time.perf_counter() - t0
    t0 = time.perf_counter()
    oracle = herzog_oracle(g, t)
    t_oracle = time.perf_counter() - t0
    return r, d, fast, oracle, t_fast, t_oracle


@pytest.mark.criterion(1)
def test_criterion_1(request):
    r, d, fast, oracle, t_fast, t_oracle = both_paths(LARGE)
    expected = [B("x1^16 - x3^3*x4^4"), B("x2^19 - x1^7*x3^13"), B("x3^16 - x2^8*x4^7"),
                B("x4^11 - x1^9*x2^11"), B("x1^7*x4^7 - x2^11*x3^3")]
    assert same_set(r.full_minimal_generators, expected)
    assert r.case_label == "1" and d.perm_case == "1b"
    assert fast.is_cm is True and oracle.is_cm is True
    assert t_fast < 1 and t_oracle < 300
    request.node.criterion_detail = f"case 1/1b, CM both ways, criterion {t_fast * 1000:.1f} ms, oracle {t_oracle:.1f} s"


@pytest.mark.criterion(2)
def test_criterion_2(request):
    r, d, fast, oracle, *_ = both_paths(SHAPE_2A)
    assert d.perm_case == "2a"
    assert fast.is_cm is True and oracle.is_cm is True
    line = next(s for s in fast.trace if s.startswith("a2+a12"))
    assert "28 <= 29" in line
    request.node.criterion_detail = line


@pytest.mark.criterion(3)
def test_criterion_3(request):
    r, d, fast, oracle, *_ = both_paths(SHAPE_2B)
    assert d.perm_case == "2b"
    assert fast.is_cm is True and oracle.is_cm is True
    line = next(s for s in fast.trace if "19 <= 20" in s)
    request.node.criterion_detail = line


@pytest.mark.criterion(4)
def test_criterion_4(request):
    g = GeneratorTuple.from_input((30, 34, 42, 51))
    t = build_tables(g)
    r = classify(g, t)
    assert len(r.full_minimal_generators) == 3 and r.set_I == [] and r.set_R == []
    assert appendix_predicates(r, g, t).is_cm is True and herzog_oracle(g, t).is_cm is True

    g = GeneratorTuple.from_input((49, 63, 65, 78))
    t = build_tables(g)
    r = classify(g, t)
    f = {3: "x1^2*x4^2 - x2^3*x3", 4: "x1^3*x2^2 - x3^3*x4", 5: "x1^5*x4 - x2*x3^4",
         6: "x1*x2^5 - x3^2*x4^3", 7: "x1^5*x3^2 - x2*x4^4", 8: "x1^8*x2 - x3*x4^5",
         9: "x1^2*x3^5 - x2^3*x4^3", 10: "x1^7*x3 - x2^4*x4^2", 11: "x1^4*x3^4 - x2^6*x4"}
    assert len(r.full_minimal_generators) == 11
    assert same_set(r.set_I, [B(f[k]) for k in (3, 4, 5, 6, 7, 9, 10, 11)])
    assert same_set(r.set_R, [B(f[8])])
    assert appendix_predicates(r, g, t).is_cm is True and herzog_oracle(g, t).is_cm is True
    request.node.criterion_detail = "3 generators with I = R = {}; 11 generators, |I| = 8, R = {f8}; CM"


@pytest.mark.criterion(5)
def test_criterion_5(request):
    t0 = time.perf_counter()
    results = [verify_member(FamilySpec("e43", m)) for m in range(4, 9)]
    elapsed = time.perf_counter() - t0
    for r in results:
        assert r.ok, [c for c in r.claims if not c[3]]
        claims = {c[0]: c for c in r.claims}
        for name in ("cohen-macaulay", "symmetric", "leading ideal", "reduced numerator",
                     "multiplicity", "nonnegative numerator"):
            assert claims[name][3]
        assert claims["cohen-macaulay"][2] is False
    # both paths: the closed form also answers not CM
    for m in range(4, 9):
        n = (2 * m + 1, 2 * m + 3, 2 * m * m + m - 2, 2 * m * m + m - 1)
        g = GeneratorTuple.from_input(n)
        d = detect_bresinsky(g, classify(g).full_minimal_generators)
        assert closed_form_criterion(d).is_cm is False
    assert elapsed < 10
    request.node.criterion_detail = f"m = 4..8 verified in {elapsed:.2f} s"


@pytest.mark.criterion(6)
def test_criterion_6(request):
    for m in range(2, 6):
        assert verify_member(FamilySpec("e41", m)).ok
    for t in (0, 2):
        r = verify_member(FamilySpec("gi", t))
        assert r.ok
        assert dict((c[0], c[2]) for c in r.claims)["cohen-macaulay"] is True
    rejected = verify_member(FamilySpec("gi", 1))
    assert rejected.rejected and "= 2" in rejected.rejected
    request.node.criterion_detail = "e41 m = 2..5 and gi t = 0, 2 CM; gi t = 1 rejected (gcd 2)"


@pytest.fixture(scope="module")
def grid():
    return run_grid(60, jobs=os.cpu_count() or 1)


@pytest.mark.criterion(7)
def test_criterion_7(grid, request):
    assert grid.tuples == 455041
    assert grid.violations == [], grid.violations[:10]
    assert grid.seconds < 15 * 60
    request.node.criterion_detail = (f"{grid.tuples} tuples, 0 violations, {grid.seconds:.0f} s, "
                                     f"IE skipped on {grid.ie_skipped}")


@pytest.mark.criterion(8)
def test_criterion_8(grid, request):
    failures = [(gens, case) for gens, case, ok in grid.gorenstein if not ok]
    for gens in (LARGE, SHAPE_2A, SHAPE_2B):
        g = GeneratorTuple.from_input(gens)
        d = detect_bresinsky(g, classify(g).full_minimal_generators)
        if not verify_prop_lexinf(d):
            failures.append((gens, d.perm_case))
    assert grid.gorenstein
    assert failures == []
    request.node.criterion_detail = f"{len(grid.gorenstein) + 3} Gorenstein instances, 0 failures"
