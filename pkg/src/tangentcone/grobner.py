"""Groebner and standard bases for pure-difference binomial ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

import numpy as np

from . import _gb
from .binomials import Binomial, deg, from_array, to_array
from .errors import BudgetExceeded
from .hilbert import MonomialIdeal

DEFAULT_BUDGET = 10**6

KINDS = ("lex", "lexinf", "neg_degree_then_lex", "graded_revlex")


@dataclass(frozen=True)
class OrderSpec:
    """A monomial order on K[x1..x4].

    ``perm`` lists the variables from largest to smallest for the lex parts.
    ``weights`` replaces the all-ones degree row of graded_revlex, which
    gives the S-degree weighted orders used for saturation.
    """

    kind: str
    perm: tuple = (1, 2, 3, 4)
    weights: tuple | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.perm) != [1, 2, 3, 4]:
            raise ValueError(f"perm must be a permutation of 1..4, got {self.perm}")
        if self.weights is not None and self.kind != "graded_revlex":
            raise ValueError("weights only apply to graded_revlex")

    @property
    def is_local(self) -> bool:
        return self.kind in ("lexinf", "neg_degree_then_lex")

    def matrix(self) -> np.ndarray:
        return _order_matrix(self)

    def _build_matrix(self) -> np.ndarray:
        e = np.eye(4, dtype=np.int64)
        p = [i - 1 for i in self.perm]
        if self.kind == "lex":
            rows = [e[i] for i in p]
        elif self.kind == "lexinf":
            rows = [-e[i] for i in p]
        elif self.kind == "neg_degree_then_lex":
            rows = [-np.ones(4, dtype=np.int64)] + [e[i] for i in p[:3]]
        else:
            w = np.ones(4, dtype=np.int64) if self.weights is None else np.asarray(
                self.weights, dtype=np.int64)
            rows = [w] + [-e[i] for i in reversed(p[1:])]
        return np.ascontiguousarray(np.array(rows, dtype=np.int64))


@lru_cache(maxsize=256)
def _order_matrix(o: OrderSpec) -> np.ndarray:
    m = o._build_matrix()
    m.flags.writeable = False
    return m


def compare(o: OrderSpec, u, v) -> int:
    """-1, 0 or 1 as x^u is smaller, equal or larger than x^v."""
    return int(_gb.cmp(o.matrix(), np.asarray(u, dtype=np.int64),
                       np.asarray(v, dtype=np.int64)))


def leading(o: OrderSpec, b: Binomial) -> Binomial:
    """b with its larger term first."""
    if b.minus is None or compare(o, b.plus, b.minus) > 0:
        return b
    return b.flipped()


@dataclass(frozen=True)
class StandardBasisResult:
    basis: list
    order: OrderSpec
    reduced: bool

    def leads(self):
        return [b.plus for b in self.basis]

    def array(self) -> np.ndarray:
        return self._array

    @cached_property
    def _array(self) -> np.ndarray:
        return to_array(self.basis)


def _rows_to_binomials(arr) -> list[Binomial]:
    # rows are oriented already, keep orientation
    return [Binomial(r[:4], r[4:]) for r in arr.tolist()]


def buchberger(gens, o: OrderSpec, budget: int = DEFAULT_BUDGET,
               product_criterion: bool = True) -> StandardBasisResult:
    """Reduced Groebner basis under a global order."""
    if o.is_local:
        raise ValueError("buchberger needs a well-order; use mora_standard_basis")
    arr = gens if isinstance(gens, np.ndarray) else to_array(gens)
    status, basis, steps = _gb.buchberger(arr, o.matrix(), budget, product_criterion)
    if status != _gb.OK:
        raise BudgetExceeded(f"Buchberger used more than {budget} reduction steps")
    return StandardBasisResult(_rows_to_binomials(basis), o, True)


def mora_standard_basis(gens, o: OrderSpec, budget: int = DEFAULT_BUDGET,
                        prime: bool = True) -> StandardBasisResult:
    """Standard basis under a local order via Mora's normal form.

    ``prime`` allows cancelling common monomial factors of new elements;
    that is sound for toric ideals, which are prime and monomial-free.
    """
    if not o.is_local:
        raise ValueError("mora_standard_basis needs a local order")
    arr = gens if isinstance(gens, np.ndarray) else to_array(gens)
    W = o.matrix()
    status, basis, steps = _gb.mora(arr, W, budget, prime)
    if status != _gb.OK:
        raise BudgetExceeded(f"Mora used more than {budget} reduction steps")
    keep = _gb.minimal_leads(basis, basis.shape[0])
    return StandardBasisResult(_rows_to_binomials(basis[keep]), o, False)


def mora_reduces_to_zero(f: Binomial, basis, o: OrderSpec,
                         budget: int = DEFAULT_BUDGET) -> bool:
    W = o.matrix()
    G = to_array([leading(o, b) for b in basis])
    h = np.array(f.to_row(), dtype=np.int64)
    if not _gb.orient(h, W):
        return True
    nz, steps = _gb.mora_normal_form(h, G, G.shape[0], W, budget)
    if steps > budget:
        raise BudgetExceeded("Mora normal form exceeded its budget")
    return not nz


def reduces_to_zero(f: Binomial, gb: StandardBasisResult,
                    budget: int = DEFAULT_BUDGET) -> bool:
    """Membership of a pure-difference binomial via a global Groebner basis."""
    G = gb.array()
    a, s1 = _gb.mono_normal_form(np.array(f.plus, dtype=np.int64), G, G.shape[0], budget)
    b, s2 = _gb.mono_normal_form(np.array(f.minus, dtype=np.int64), G, G.shape[0], budget)
    if max(s1, s2) > budget:
        raise BudgetExceeded("normal form exceeded its budget")
    return bool(np.array_equal(a, b))


def lowest_forms_ideal(sb: StandardBasisResult) -> list[Binomial]:
    """Lowest-degree homogeneous parts of the basis elements.

    A binomial with terms of different degrees contributes its lower-degree
    term as a monomial (``minus=None``); a homogeneous one is kept whole.
    """
    out = []
    for b in sb.basis:
        dp, dm = deg(b.plus), deg(b.minus)
        if dp == dm:
            out.append(b)
        else:
            out.append(Binomial(b.plus if dp < dm else b.minus, None))
    return out


def leading_term_ideal(sb: StandardBasisResult) -> MonomialIdeal:
    return MonomialIdeal.of(b.plus for b in sb.basis)


def tangent_cone_basis(gens, perm=(1, 2, 3, 4), budget: int = DEFAULT_BUDGET):
    """Standard basis of I(C) under negative degree with lex tie-break."""
    return mora_standard_basis(gens, OrderSpec("neg_degree_then_lex", perm), budget)


# lex-inf variable order for which the five Gorenstein generators form a
# standard basis, per permutation case
LEXINF_PERM = {
    "1a": (1, 2, 3, 4), "1b": (1, 2, 3, 4), "2b": (1, 2, 3, 4), "3a": (1, 2, 3, 4),
    "2a": (1, 3, 2, 4), "3b": (1, 3, 2, 4),
}


def spairs_reduce(gens, o: OrderSpec, budget: int = DEFAULT_BUDGET) -> bool:
    """Every S-pair of ``gens`` has weak normal form zero under ``o``."""
    W = o.matrix()
    G = to_array([leading(o, b) for b in gens])
    h = np.zeros(8, dtype=np.int64)
    for i, j in combinations(range(len(gens)), 2):
        _gb.spoly(G[i], G[j], h)
        if not _gb.orient(h, W):
            continue
        if o.is_local:
            nz, steps = _gb.mora_normal_form(h, G, G.shape[0], W, budget)
        else:
            nz, steps = _gb.top_reduce(h, G, G.shape[0], W, budget)
        if steps > budget:
            raise BudgetExceeded("S-pair reduction exceeded its budget")
        if nz:
            return False
    return True


def verify_prop_lexinf(d, budget: int = DEFAULT_BUDGET) -> bool:
    """Check the five Gorenstein generators form a lex-inf standard basis."""
    o = OrderSpec("lexinf", LEXINF_PERM[d.perm_case])
    return spairs_reduce(d.generators, o, budget)


__all__ = [
    "OrderSpec", "StandardBasisResult", "compare", "leading", "buchberger",
    "mora_standard_basis", "mora_reduces_to_zero", "reduces_to_zero",
    "lowest_forms_ideal", "leading_term_ideal", "tangent_cone_basis",
    "verify_prop_lexinf", "spairs_reduce", "from_array",
]
