"""Hilbert series of K[x1..x4]/I for monomial ideals I."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from . import _kernels
from .binomials import divides, format_mono


def _sort_key(u):
    return (sum(u), u)


def minimalize(gens) -> tuple:
    """Drop duplicates and non-minimal generators, then sort."""
    uniq = sorted(set(tuple(int(x) for x in g) for g in gens), key=_sort_key)
    out = []
    for g in uniq:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators sorted by (degree, exponents)."""

    gens: tuple

    @classmethod
    def of(cls, gens) -> MonomialIdeal:
        return cls(minimalize(gens))

    def __contains__(self, u) -> bool:
        return any(divides(g, u) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def array(self) -> np.ndarray:
        if not self.gens:
            return np.zeros((0, 4), dtype=np.int64)
        return np.array(self.gens, dtype=np.int64)

    def __str__(self):
        return "<" + ", ".join(format_mono(g) for g in self.gens) + ">"


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in t, coefficients by ascending degree."""

    coefficients: tuple

    def __post_init__(self):
        c = list(int(x) for x in self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def from_terms(cls, terms: dict) -> IntPolynomial:
        if not terms:
            return cls(())
        c = [0] * (max(terms) + 1)
        for k, v in terms.items():
            c[k] += v
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coefficients))

    def __add__(self, other):
        return IntPolynomial(_add(self.coefficients, other.coefficients))

    def __sub__(self, other):
        return IntPolynomial(_sub(self.coefficients, other.coefficients))

    def __mul__(self, other):
        return IntPolynomial(_mul(self.coefficients, other.coefficients))

    def __pow__(self, k: int):
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> IntPolynomial:
        return IntPolynomial((0,) * k + self.coefficients)

    def divide_one_minus_t(self, times: int = 1) -> IntPolynomial:
        """Exact quotient by (1 - t)^times; ValueError when inexact."""
        c = list(self.coefficients)
        for _ in range(times):
            if sum(c) != 0:
                raise ValueError("not divisible by (1 - t)")
            q, acc = [], 0
            for x in c[:-1]:
                acc += x
                q.append(acc)
            c = q
        return IntPolynomial(c)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            coef = str(abs(c)) if (abs(c) != 1 or k == 0) else ""
            sign = "-" if c < 0 else "+"
            parts.append((sign, coef + mono))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f" {sg} {body}" for sg, body in parts[1:])


ONE_MINUS_T = IntPolynomial((1, -1))


def _add(a, b):
    n = max(len(a), len(b))
    return tuple((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n))


def _sub(a, b):
    n = max(len(a), len(b))
    return tuple((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n))


def _mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def colon_by_monomial(I: MonomialIdeal, m) -> MonomialIdeal:
    """(I : x^m), generated by g / gcd(g, x^m)."""
    return MonomialIdeal.of(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in I.gens)


def _pairwise_coprime(gens) -> bool:
    used = [0, 0, 0, 0]
    for g in gens:
        for k, e in enumerate(g):
            if e:
                if used[k]:
                    return False
                used[k] = 1
    return True


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    if _pairwise_coprime(gens):
        out = (1,)
        for g in gens:
            d = sum(g)
            out = _mul(out, (1,) + (0,) * (d - 1) + (-1,))
        return out
    J, u = gens[:-1], gens[-1]
    colon = minimalize(tuple(max(a - b, 0) for a, b in zip(g, u)) for g in J)
    rest = _numerator(colon)
    return _sub(_numerator(J), (0,) * sum(u) + rest)


def numerator(I: MonomialIdeal) -> IntPolynomial:
    """g(t) with Hilbert series of K[x1..x4]/I equal to g(t) / (1 - t)^4.

    Uses p(I) = p(J) - t^|u| p(J : x^u), peeling the last sorted generator.
    """
    return IntPolynomial(_numerator(I.gens))


def numerator_peeling(I: MonomialIdeal, order) -> IntPolynomial:
    """Same recursion with an explicit peel sequence at the top level.

    ``order`` lists generators to remove first; the rest recurse normally.
    """
    gens = list(I.gens)
    for u in order:
        u = tuple(u)
        gens.remove(u)
    head = MonomialIdeal(tuple(gens))
    p = numerator(head)
    current = list(gens)
    for u in reversed(list(order)):
        u = tuple(u)
        J = MonomialIdeal.of(current)
        p = p - numerator(colon_by_monomial(J, u)).shift(sum(u))
        current.append(u)
    return p


def inclusion_exclusion_numerator(I: MonomialIdeal) -> IntPolynomial:
    """Alternating sum over generator subsets of t^deg(lcm)."""
    arr = I.array()
    top = int(arr.max(axis=0).sum()) if len(arr) else 0
    return IntPolynomial(_kernels.inclusion_exclusion(arr, top))


def reduced_numerator(I: MonomialIdeal, dim: int) -> IntPolynomial:
    """numerator(I) / (1 - t)^(4 - dim), checked to be the true h-polynomial."""
    p = numerator(I)
    try:
        h = p.divide_one_minus_t(4 - dim)
    except ValueError:
        raise ValueError(f"numerator not divisible by (1-t)^{4 - dim}; dimension exceeds {dim}") from None
    if h(1) == 0:
        raise ValueError(f"quotient has dimension below {dim}")
    return h


def series_coefficients(p: IntPolynomial, poles: int, horizon: int) -> list[int]:
    """First horizon+1 coefficients of p(t) / (1 - t)^poles."""
    if poles == 0:
        c = p.coefficients
        return [c[k] if k < len(c) else 0 for k in range(horizon + 1)]
    return [sum(c * comb(k - i + poles - 1, poles - 1)
                for i, c in enumerate(p.coefficients) if i <= k)
            for k in range(horizon + 1)]


def hf_values(I: MonomialIdeal, horizon: int) -> list[int]:
    """Number of standard monomials in each degree 0..horizon."""
    if horizon < 0:
        raise ValueError("horizon must be non-negative")
    return [int(x) for x in _kernels.count_standard(I.array(), horizon)]


def is_nondecreasing(I: MonomialIdeal) -> tuple[bool, str]:
    """Whether the Hilbert function of a one-dimensional quotient never drops."""
    h = reduced_numerator(I, 1)
    if all(c >= 0 for c in h.coefficients):
        return True, "nonnegative numerator"
    hf = hf_values(I, h.degree + 1)
    for k in range(1, len(hf)):
        if hf[k] < hf[k - 1]:
            return False, f"HF({k}) = {hf[k]} < HF({k - 1}) = {hf[k - 1]}"
    return True, "direct count"
