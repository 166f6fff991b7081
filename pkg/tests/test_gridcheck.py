from itertools import combinations
from math import gcd

from tangentcone.gridcheck import check_tuple, grid_tuples, run_grid


def test_grid_enumeration_is_lexicographic_and_coprime():
    tups = list(grid_tuples(12))
    assert tups == sorted(tups)
    assert len(tups) == sum(1 for c in combinations(range(1, 13), 4) if gcd(*c) == 1)
    assert all(gcd(*t) == 1 for t in tups)
    assert list(grid_tuples(12, 10)) == []


def test_single_tuple_checks():
    r = check_tuple((9, 11, 34, 35))
    assert r.violations == []
    assert r.gorenstein == "2b" and r.lexinf_ok
    assert r.is_cm is False and r.nondecreasing is True
    assert r.fast_methods == ("closed_form(2b)",)


def test_small_grid_is_clean():
    s = run_grid(22)
    assert s.violations == []
    assert s.tuples == len(list(grid_tuples(22)))
    assert s.gorenstein and all(ok for *_, ok in s.gorenstein)
    assert "violations: 0" in s.lines()[1]
