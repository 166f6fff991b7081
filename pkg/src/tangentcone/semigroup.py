"""Arithmetic in the numerical semigroup S = <n1, n2, n3, n4>."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import _kernels
from .errors import InvalidGenerators, TableRangeError, TableTooLarge

#: default cap on DP table entries
MAX_TABLE_ENTRIES = 2**28


@dataclass(frozen=True)
class GeneratorTuple:
    """Four distinct generators with gcd 1, stored sorted.

    ``original_order[k]`` is the sorted position of the k-th input value.
    """

    gens: tuple[int, int, int, int]
    original_order: tuple[int, int, int, int] = (0, 1, 2, 3)

    def __post_init__(self):
        g = self.gens
        if len(g) != 4:
            raise InvalidGenerators(f"expected 4 generators, got {len(g)}")
        if any(not isinstance(n, (int, np.integer)) or n <= 0 for n in g):
            raise InvalidGenerators(f"generators must be positive integers: {g}")
        if len(set(g)) != 4:
            raise InvalidGenerators(f"duplicate generators: {g}")
        if list(g) != sorted(g):
            raise InvalidGenerators(f"generators must be strictly increasing: {g}")
        if gcd(*g) != 1:
            raise InvalidGenerators(f"gcd{g} = {gcd(*g)} != 1")

    @classmethod
    def from_input(cls, values) -> GeneratorTuple:
        """Sort arbitrary-order input, remembering the permutation."""
        values = [int(v) for v in values]
        if len(values) != 4:
            raise InvalidGenerators(f"expected 4 generators, got {len(values)}")
        if len(set(values)) != 4:
            raise InvalidGenerators(f"duplicate generators: {tuple(values)}")
        ranked = sorted(values)
        order = tuple(ranked.index(v) for v in values)
        return cls(tuple(ranked), order)

    @property
    def n1(self) -> int:
        return self.gens[0]

    @property
    def box_bounds(self) -> tuple[int, int, int]:
        """b_i = n1 / gcd(n1, n_i) for i = 2, 3, 4."""
        n1 = self.gens[0]
        return tuple(n1 // gcd(n1, n) for n in self.gens[1:])

    @property
    def oracle_limit(self) -> int:
        """Largest S-degree the Herzog box can produce."""
        return sum((b - 1) * n for b, n in zip(self.box_bounds, self.gens[1:]))

    def sdeg(self, u) -> int:
        return sum(e * n for e, n in zip(u, self.gens))

    def array(self) -> np.ndarray:
        return np.asarray(self.gens, dtype=np.int64)

    def __iter__(self):
        return iter(self.gens)


@dataclass(frozen=True, eq=False)
class MembershipTables:
    limit: int
    in_S: np.ndarray = field(repr=False)
    max_len: np.ndarray = field(repr=False)

    def contains(self, m: int) -> bool:
        self._check(m)
        return m >= 0 and bool(self.in_S[m])

    def length(self, m: int) -> int | None:
        """Maximal factorization length of m, or None when m is not in S."""
        self._check(m)
        if m < 0:
            return None
        v = int(self.max_len[m])
        return None if v < 0 else v

    def _check(self, m):
        if m > self.limit:
            raise TableRangeError(f"query {m} beyond table limit {self.limit}")


def build_tables(g: GeneratorTuple, limit: int | None = None,
                 max_entries: int = MAX_TABLE_ENTRIES) -> MembershipTables:
    """Membership and maximal factorization length for 0..limit.

    The default limit is the largest S-degree the CM oracle queries plus n1,
    which also covers the Apery set.
    """
    if limit is None:
        limit = g.oracle_limit + g.n1
    limit = int(limit)
    if limit < 0:
        raise ValueError("limit must be non-negative")
    if limit + 1 > max_entries:
        raise TableTooLarge(
            f"table for {g.gens} needs {limit + 1} entries, cap is {max_entries}")
    in_s, max_len = _kernels.dp_tables(g.array(), limit)
    in_s = in_s.view(np.bool_)
    in_s.flags.writeable = False
    max_len.flags.writeable = False
    return MembershipTables(limit, in_s, max_len)


def apery_set(g: GeneratorTuple, t: MembershipTables) -> list[int]:
    """Smallest element of S in each residue class mod n1, sorted."""
    n1 = g.n1
    rows = -(-len(t.in_S) // n1)
    grid = np.zeros(rows * n1, dtype=bool)
    grid[: len(t.in_S)] = t.in_S
    grid = grid.reshape(rows, n1)
    first = grid.argmax(axis=0)
    hit = grid[first, np.arange(n1)]
    if not hit.all():
        missing = np.flatnonzero(~hit).tolist()
        raise TableRangeError(
            f"table limit {t.limit} does not reach residue classes {missing[:5]} mod {n1}")
    return sorted((first * n1 + np.arange(n1)).tolist())


def frobenius(g: GeneratorTuple, t: MembershipTables) -> int:
    return max(apery_set(g, t)) - g.n1


def is_symmetric(g: GeneratorTuple, t: MembershipTables) -> bool:
    f = frobenius(g, t)
    if f < 0:
        return True
    s = t.in_S[: f + 1]
    return bool(np.all(s != s[::-1]))


def gaps(g: GeneratorTuple, t: MembershipTables) -> list[int]:
    f = frobenius(g, t)
    return [int(m) for m in np.flatnonzero(~t.in_S[: f + 1])]


def factorizations(g: GeneratorTuple, m: int, cap: int = 1_000_000) -> list[tuple]:
    """All exponent vectors u with sum u_i n_i = m."""
    if m < 0:
        raise ValueError("m must be non-negative")
    arr = g.array()
    count = _kernels.count_factorizations(arr, m, cap)
    if count < 0:
        raise TableTooLarge(f"more than {cap} factorizations of {m}")
    out = np.empty((count, 4), dtype=np.int64)
    _kernels.fill_factorizations(arr, m, out)
    return [tuple(int(x) for x in row) for row in out]
