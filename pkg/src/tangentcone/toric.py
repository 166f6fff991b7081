"""Toric ideal I(C): generators, critical binomials and the case taxonomy."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import _kernels
from .binomials import Binomial, deg, sdeg, support, to_array
from .errors import InvariantViolation, TableTooLarge
from .grobner import OrderSpec, buchberger, reduces_to_zero
from .semigroup import GeneratorTuple, MembershipTables, apery_set, build_tables, factorizations

FIBER_CAP = 200_000


def a_values(g: GeneratorTuple) -> tuple:
    """a_i least with a_i * n_i in the semigroup of the other three."""
    arr = g.array()
    out = []
    for i, n in enumerate(g.gens):
        partner = g.gens[1] if i == 0 else g.gens[0]
        bound = partner // gcd(partner, n)
        a = _kernels.least_multiple(arr, i, bound)
        if a < 0:
            raise InvariantViolation(f"no multiple of n{i + 1} up to {bound} found")
        out.append(int(a))
    return tuple(out)


def _pure(i, e) -> tuple:
    u = [0, 0, 0, 0]
    u[i - 1] = e
    return tuple(u)


def critical_binomials(g: GeneratorTuple, i: int, a=None) -> list[Binomial]:
    """All x_i^{a_i} - x^u with u free of x_i; i is 1-based."""
    a = a or a_values(g)
    target = a[i - 1] * g.gens[i - 1]
    lead = _pure(i, a[i - 1])
    return [Binomial(lead, u) for u in factorizations(g, target) if u[i - 1] == 0]


def fiber(g: GeneratorTuple, s: int, cap: int = FIBER_CAP) -> list[tuple]:
    return factorizations(g, s, cap)


# -- lattice and saturation -------------------------------------------------

def lattice_kernel(g: GeneratorTuple) -> list[tuple]:
    """A basis of {v in Z^4 : sum v_i n_i = 0}, pairwise size-reduced.

    Integer row operations on [n | I] bring n to a single entry gcd = 1;
    the remaining rows of the unimodular transform span the kernel.
    """
    v = list(g.gens)
    U = [[int(i == j) for j in range(4)] for i in range(4)]
    while sum(1 for x in v if x) > 1:
        p = min((k for k in range(4) if v[k]), key=lambda k: abs(v[k]))
        for j in range(4):
            if j != p and v[j]:
                q = v[j] // v[p]
                v[j] -= q * v[p]
                U[j] = [a - q * b for a, b in zip(U[j], U[p])]
    basis = [U[k] for k in range(4) if v[k] == 0]
    return [tuple(b) for b in _size_reduce(basis)]


def _size_reduce(basis):
    """Greedy pairwise reduction: subtract rounded multiples while norms shrink."""
    basis = [list(b) for b in basis]

    def norm(b):
        return sum(x * x for x in b)

    improved = True
    while improved:
        improved = False
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                bj = basis[j]
                nj = norm(bj)
                dot = sum(x * y for x, y in zip(basis[i], bj))
                q = (2 * dot + nj) // (2 * nj)
                if q:
                    cand = [x - q * y for x, y in zip(basis[i], bj)]
                    if norm(cand) < norm(basis[i]):
                        basis[i] = cand
                        improved = True
    return basis


def lattice_binomials(g: GeneratorTuple) -> list[Binomial]:
    out = []
    for v in lattice_kernel(g):
        plus = tuple(max(x, 0) for x in v)
        minus = tuple(max(-x, 0) for x in v)
        out.append(Binomial(plus, minus))
    return out


def saturation_order(g: GeneratorTuple, i: int) -> OrderSpec:
    """S-degree weighted reverse lex with x_i the smallest variable."""
    perm = tuple(k for k in (1, 2, 3, 4) if k != i) + (i,)
    return OrderSpec("graded_revlex", perm, tuple(g.gens))


def saturation_basis(g: GeneratorTuple, budget: int = 10**6):
    """Groebner basis of I(C) from the lattice-basis ideal.

    Saturates by x1, x2, x3, x4 in turn; each step takes a basis under an
    order with x_i last and divides every element by its largest x_i power.
    The last basis is a Groebner basis of I(C) under ``saturation_order(g, 4)``.
    """
    arr = to_array(lattice_binomials(g))
    gb = None
    for i in (1, 2, 3, 4):
        gb = buchberger(arr, saturation_order(g, i), budget)
        arr = gb.array().copy()
        k = np.minimum(arr[:, i - 1], arr[:, 3 + i])
        arr[:, i - 1] -= k
        arr[:, 3 + i] -= k
    # the divided set is again a Groebner basis; reduce it for a clean result
    return buchberger(arr, saturation_order(g, 4), budget)


def toric_generators_saturation(g: GeneratorTuple, budget: int = 10**6) -> list[Binomial]:
    """Binomial generators of I(C) by lattice saturation, coprime terms."""
    return [Binomial.of(b.plus, b.minus) for b in saturation_basis(g, budget).basis]


# -- fibers, Betti degrees, minimal generators ------------------------------

def betti_candidates(g: GeneratorTuple, t: MembershipTables | None = None) -> list[int]:
    """Degrees w + n_j, w in the Apery set of n1 and j >= 2.

    Every Betti degree has this form: some factorization outside the
    component of any given one uses a variable x_j, and two monomials from
    different components never share a variable.
    """
    t = t or build_tables(g)
    ap = apery_set(g, t)
    return sorted({w + n for w in ap for n in g.gens[1:]})


def _components(monos) -> dict:
    """Component label per monomial, monomials joined when sharing a variable."""
    parent = list(range(4))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in monos:
        vs = [k for k in range(4) if u[k]]
        for v in vs[1:]:
            a, b = find(vs[0]), find(v)
            if a != b:
                parent[b] = a
    return {u: (find(next(k for k in range(4) if u[k])) if any(u) else -1) for u in monos}


def _edge_key(p, q, prefer, a, s):
    b = Binomial.of(p, q)
    preferred = b.key() in prefer
    critical = any(_is_pure(x) is not None and a[_is_pure(x)] * 1 == x[_is_pure(x)]
                   for x in (p, q))
    return (not preferred, not critical, -len(b.support()), sorted((p, q), reverse=True))


def _is_pure(u):
    nz = [k for k in range(4) if u[k]]
    return nz[0] if len(nz) == 1 else None


def _connect(monos, comp, prefer, a, s):
    """Kruskal over components; returns connecting binomials."""
    roots = {c: c for c in set(comp.values())}

    def find(c):
        while roots[c] != c:
            roots[c] = roots[roots[c]]
            c = roots[c]
        return c

    edges = []
    for x in range(len(monos)):
        for y in range(x + 1, len(monos)):
            p, q = monos[x], monos[y]
            if comp[p] != comp[q]:
                edges.append((_edge_key(p, q, prefer, a, s), p, q))
    edges.sort()
    out = []
    for _, p, q in edges:
        cp, cq = find(comp[p]), find(comp[q])
        if cp != cq:
            roots[cq] = cp
            out.append(_orient_for_output(p, q))
    return out


def _orient_for_output(p, q):
    """Pure power first, otherwise the term containing the lowest variable."""
    if _is_pure(q) is not None and _is_pure(p) is None:
        p, q = q, p
    elif _is_pure(p) is None and _is_pure(q) is None and q > p:
        p, q = q, p
    elif _is_pure(p) is not None and _is_pure(q) is not None and _is_pure(q) < _is_pure(p):
        p, q = q, p
    return Binomial(p, q)


def minimal_generators_fiber(g: GeneratorTuple, degree_bound: int | None = None,
                             prefer=(), t: MembershipTables | None = None, a=None):
    """Minimal binomial generators from disconnected fibers.

    Returns (generators, Betti degrees).  In each degree the fiber graph
    needs (components - 1) generators; ``prefer`` lists binomials to use
    first when they connect components.  Without ``degree_bound`` all Betti
    degrees are covered, so the output minimally generates I(C).
    """
    t = t or build_tables(g)
    a = a or a_values(g)
    cands = betti_candidates(g, t)
    if degree_bound is not None:
        cands = [s for s in cands if s <= degree_bound]
    counts = _kernels.betti_scan(g.array(), np.array(cands, dtype=np.int64))
    prefer = {b.key() for b in prefer}
    gens, degrees = [], []
    for s, c in zip(cands, counts):
        if c < 2:
            continue
        monos = fiber(g, s)
        comp = _components(monos)
        gens.extend(_connect(monos, comp, prefer, a, s))
        degrees.append(int(s))
    return gens, degrees


def fiber_size(g: GeneratorTuple, s: int, cap: int) -> int:
    """Number of factorizations of s, or cap + 1 when there are more than cap."""
    if s < 0:
        return 0
    c = _kernels.count_factorizations(g.array(), s, cap)
    return cap + 1 if c < 0 else int(c)


def is_indispensable(g: GeneratorTuple, b: Binomial) -> bool:
    """The fiber of b's degree is exactly its two terms, and they are coprime."""
    b = Binomial.of(b.plus, b.minus)
    s = b.s_degree(g.gens)
    if sdeg(b.minus, g.gens) != s:
        raise ValueError(f"{b} is not homogeneous for {g.gens}")
    if fiber_size(g, s, 2) != 2:
        return False
    return not (support(b.plus) & support(b.minus))


def is_indispensable_monomial(g: GeneratorTuple, u) -> bool:
    """x^u is a minimal monomial with a non-singleton fiber."""
    s = sdeg(u, g.gens)
    if fiber_size(g, s, 1) < 2:
        return False
    for k in range(4):
        if u[k] and fiber_size(g, s - g.gens[k], 1) > 1:
            return False
    return True


def connected_by_moves(g: GeneratorTuple, gens, u, v, cap: int = FIBER_CAP) -> bool:
    """x^u - x^v lies in the ideal of the pure-difference binomials ``gens``.

    Equivalent to u and v being joined by moves u -> u - p + q along the
    generators, explored inside the common fiber.
    """
    if u == v:
        return True
    moves = []
    for b in gens:
        moves.append((b.plus, b.minus))
        moves.append((b.minus, b.plus))
    seen = {u}
    stack = [u]
    while stack:
        w = stack.pop()
        for p, q in moves:
            if all(x >= y for x, y in zip(w, p)):
                nxt = tuple(x - y + z for x, y, z in zip(w, p, q))
                if nxt == v:
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise TableTooLarge("fiber exploration exceeded its cap")
                    stack.append(nxt)
    return False


def ideals_agree(g: GeneratorTuple, first, second, budget: int = 10**6) -> tuple[bool, str]:
    """Mutual Groebner reduction of two binomial generating sets."""
    o = saturation_order(g, 4)
    gb1 = buchberger(to_array(first), o, budget)
    gb2 = buchberger(to_array(second), o, budget)
    for b in second:
        if not reduces_to_zero(b, gb1, budget):
            return False, f"{b} not in the ideal of the first set"
    for b in first:
        if not reduces_to_zero(b, gb2, budget):
            return False, f"{b} not in the ideal of the second set"
    return True, "mutual reduction to zero"


# -- critical ideal and case classification ---------------------------------

def critical_ideal(g: GeneratorTuple, a=None) -> list[Binomial]:
    """A minimal binomial generating set S of the critical ideal.

    Degrees a_i n_i are processed upward.  Inside each fiber, monomials
    already joined by moves of lower-degree generators are merged, then
    critical binomials are added Kruskal-style, pure-power pairs first.
    """
    a = a or a_values(g)
    c = [ai * n for ai, n in zip(a, g.gens)]
    S = []
    for d in sorted(set(c)):
        monos = fiber(g, d)
        idx = {u: k for k, u in enumerate(monos)}
        parent = list(range(len(monos)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for b in S:
            for p, q in ((b.plus, b.minus), (b.minus, b.plus)):
                for u in monos:
                    if all(x >= y for x, y in zip(u, p)):
                        v = tuple(x - y + z for x, y, z in zip(u, p, q))
                        ru, rv = find(idx[u]), find(idx[v])
                        if ru != rv:
                            parent[rv] = ru
        edges = []
        for i in range(1, 5):
            if c[i - 1] != d:
                continue
            lead = _pure(i, a[i - 1])
            for u in monos:
                if u[i - 1] == 0:
                    pure_pair = _is_pure(u) is not None
                    edges.append(((not pure_pair, i, tuple(-x for x in u)), lead, u))
        edges.sort()
        for _, p, q in edges:
            rp, rq = find(idx[p]), find(idx[q])
            if rp != rq:
                parent[rq] = rp
                S.append(Binomial(p, q))
    return S


@dataclass
class CaseReport:
    case_label: str
    a_values: tuple
    critical_generators: list
    mu: int
    set_I: list
    set_R: list
    full_minimal_generators: list
    betti_degrees: list = field(default_factory=list)
    roles: dict = field(default_factory=dict)
    degenerate: bool = False
    anomalies: list = field(default_factory=list)

    @property
    def c_values(self):
        return self.roles.get("c")


def _label(c, mu) -> tuple[str, dict]:
    groups = {}
    for i, v in enumerate(c, start=1):
        groups.setdefault(v, []).append(i)
    sizes = sorted(len(v) for v in groups.values())
    blocks = sorted((sorted(v) for v in groups.values() if len(v) > 1))
    roles = {"c": list(c), "equal_blocks": blocks}
    if sizes == [1, 1, 1, 1]:
        return "1", roles
    if sizes == [1, 1, 2]:
        return ("4a" if mu == 4 else "4b" if mu == 3 else "4?"), roles
    if sizes == [2, 2]:
        return ("2a" if mu == 3 else "2b" if mu == 2 else "2?"), roles
    if sizes == [1, 3]:
        return "3", roles
    return "2c", roles


def _in_set_I(g, b, a) -> bool:
    if not b.full_support():
        return False
    if len(support(b.plus)) != 2 or len(support(b.minus)) != 2:
        return False
    for M, N in ((b.plus, b.minus), (b.minus, b.plus)):
        if all(0 < M[k] < a[k] for k in range(4) if M[k]) and is_indispensable_monomial(g, N):
            return True
    return False


def classify(g: GeneratorTuple, t: MembershipTables | None = None,
             mingens=None, verify_saturation: bool = False,
             budget: int = 10**6) -> CaseReport:
    """Critical-binomial case, the sets S, I, R and the minimal generators."""
    t = t or build_tables(g)
    a = a_values(g)
    S = critical_ideal(g, a)
    mu = len(S)
    c = tuple(ai * n for ai, n in zip(a, g.gens))
    label, roles = _label(c, mu)
    if mingens is None:
        mingens, betti = minimal_generators_fiber(g, prefer=S, t=t, a=a)
    else:
        betti = sorted({b.s_degree(g.gens) for b in mingens})
    if verify_saturation:
        ok, why = ideals_agree(g, toric_generators_saturation(g, budget), mingens, budget)
        if not ok:
            raise InvariantViolation(f"saturation and fiber generators differ: {why}")
    anomalies = []
    skeys = {b.key() for b in S}
    mkeys = {b.key() for b in mingens}
    if not skeys <= mkeys:
        anomalies.append("critical generators not all among the minimal generators")
    rest = [b for b in mingens if b.key() not in skeys]
    set_I = [b for b in rest if _in_set_I(g, b, a)]
    ikeys = {b.key() for b in set_I}
    set_R = [b for b in rest if b.key() not in ikeys]
    if set_R and label not in ("2a", "2b", "4b"):
        anomalies.append(f"case {label} with leftover generators outside S and I")
    if any(not b.full_support() for b in set_R):
        anomalies.append("leftover generator without full support")
    degenerate = min(a) < 2
    if degenerate:
        anomalies.append("some a_i = 1: the generators are not minimal")
    roles.update(_roles(label, g, a, S))
    return CaseReport(label, a, S, mu, set_I, set_R, list(mingens), betti, roles,
                      degenerate, anomalies)


def _roles(label, g, a, S) -> dict:
    """Index roles used by the per-case criteria."""
    c = [ai * n for ai, n in zip(a, g.gens)]
    r = {}
    if label.startswith("2") and label != "2c":
        i = next(k for k in (2, 3, 4) if c[k - 1] == c[0])
        j, k = sorted(x for x in (2, 3, 4) if x != i)
        r.update(partner=i, j=j, k=k)
        extra = [b for b in S if _is_pure(b.minus) is None]
        if extra:
            d = extra[0].s_degree(g.gens)
            r["third"] = "x1" if d == c[0] else "xj"
    elif label == "3":
        block = [k for k in (1, 2, 3, 4) if c.count(c[k - 1]) == 3]
        odd = next(k for k in (1, 2, 3, 4) if k not in block)
        r.update(block=block, odd=odd)
    elif label.startswith("4"):
        pair = [k for k in (1, 2, 3, 4) if c.count(c[k - 1]) == 2]
        r["pair"] = pair
    return r


def critical_monomial(S, i) -> tuple | None:
    """The non-pure term of the S element led by x_i^{a_i}."""
    for b in S:
        if _is_pure(b.plus) == i - 1 and _is_pure(b.minus) is None:
            return b.minus
    return None


__all__ = [
    "a_values", "critical_binomials", "lattice_kernel", "lattice_binomials",
    "saturation_basis", "toric_generators_saturation", "minimal_generators_fiber",
    "betti_candidates", "is_indispensable", "is_indispensable_monomial",
    "connected_by_moves", "ideals_agree", "critical_ideal", "classify", "CaseReport",
    "fiber", "deg",
]
