"""Monomials as exponent 4-tuples and pure-difference binomials."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

Mono = tuple  # 4 non-negative ints


def deg(u) -> int:
    return sum(u)


def sdeg(u, gens) -> int:
    return sum(e * n for e, n in zip(u, gens))


def support(u) -> frozenset:
    """Variable indices (1-based) dividing x^u."""
    return frozenset(i + 1 for i, e in enumerate(u) if e)


def divides(u, v) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_gcd(u, v) -> Mono:
    return tuple(min(a, b) for a, b in zip(u, v))


def mono_lcm(u, v) -> Mono:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_sub(u, v) -> Mono:
    return tuple(a - b for a, b in zip(u, v))


def mono_add(u, v) -> Mono:
    return tuple(a + b for a, b in zip(u, v))


def format_mono(u) -> str:
    if not any(u):
        return "1"
    parts = []
    for i, e in enumerate(u):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


_FACTOR = re.compile(r"x([1-4])(?:\^(\d+))?$")


def parse_mono(text: str) -> Mono:
    text = text.strip().replace(" ", "")
    e = [0, 0, 0, 0]
    if text == "1":
        return tuple(e)
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        e[int(m.group(1)) - 1] += int(m.group(2) or 1)
    return tuple(e)


@dataclass(frozen=True)
class Binomial:
    """x^plus - x^minus with coprime, distinct terms.

    A zero ``minus`` together with a non-trivial ``plus`` never occurs for
    toric ideals; monomial elements use ``minus=None`` instead.
    """

    plus: Mono
    minus: Mono | None

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(map(int, self.plus)))
        if self.minus is not None:
            object.__setattr__(self, "minus", tuple(map(int, self.minus)))
            if self.plus == self.minus:
                raise ValueError("binomial with equal terms is zero")

    @classmethod
    def of(cls, plus, minus) -> Binomial:
        """Build from arbitrary terms, cancelling their common factor."""
        g = mono_gcd(plus, minus)
        return cls(mono_sub(plus, g), mono_sub(minus, g))

    @classmethod
    def parse(cls, text: str) -> Binomial:
        left, right = text.split("-")
        return cls.of(parse_mono(left), parse_mono(right))

    @property
    def is_monomial(self) -> bool:
        return self.minus is None

    def terms(self):
        return (self.plus,) if self.minus is None else (self.plus, self.minus)

    def flipped(self) -> Binomial:
        return Binomial(self.minus, self.plus)

    def key(self):
        """Sign-insensitive identity."""
        if self.minus is None:
            return (self.plus,)
        return tuple(sorted((self.plus, self.minus)))

    def s_degree(self, gens) -> int:
        return sdeg(self.plus, gens)

    def support(self) -> frozenset:
        s = support(self.plus)
        return s if self.minus is None else s | support(self.minus)

    def full_support(self) -> bool:
        return len(self.support()) == 4

    def lowest_degree(self) -> int:
        return min(deg(t) for t in self.terms())

    def to_row(self) -> list[int]:
        return list(self.plus) + list(self.minus or (0, 0, 0, 0))

    def __str__(self):
        if self.minus is None:
            return format_mono(self.plus)
        return f"{format_mono(self.plus)} - {format_mono(self.minus)}"


def same_set(a, b) -> bool:
    """Equality of binomial collections up to sign and order."""
    return sorted(x.key() for x in a) == sorted(x.key() for x in b)


def to_array(bins) -> np.ndarray:
    """Pack binomials into an (m, 8) int64 array: plus then minus."""
    out = np.zeros((len(bins), 8), dtype=np.int64)
    for r, b in enumerate(bins):
        out[r] = b.to_row()
    return out


def from_array(arr) -> list[Binomial]:
    return [Binomial.of(tuple(int(x) for x in row[:4]), tuple(int(x) for x in row[4:]))
            for row in arr]
