"""Five-generator Gorenstein (non complete intersection) toric ideals."""

from __future__ import annotations

from dataclasses import dataclass, field

from .binomials import Binomial, support
from .hilbert import MonomialIdeal
from .semigroup import GeneratorTuple

# Each labelled shape is determined by the map i -> c(i), where c(i) is the
# variable missing from the generator led by x_i.  It is always a 4-cycle;
# listed here as the orbit of 1.
CYCLE_LABELS = {
    (1, 2, 3, 4): "1a", (1, 2, 4, 3): "1b",
    (1, 4, 3, 2): "2a", (1, 4, 2, 3): "2b",
    (1, 3, 2, 4): "3a", (1, 3, 4, 2): "3b",
}

# the fifth generator x_i^{a_ki} x_j^{a_lj} - x_k^{a_jk} x_l^{a_il}, as ((i, j), (k, l))
FIFTH_PATTERN = {
    "1a": ((1, 3), (2, 4)), "1b": ((1, 4), (2, 3)),
    "2a": ((2, 4), (1, 3)), "2b": ((1, 2), (4, 3)),
    "3a": ((1, 2), (3, 4)), "3b": ((2, 3), (1, 4)),
}


@dataclass(frozen=True)
class GorensteinData:
    """Exponents of the five generators.

    ``aij[(i, j)]`` is the exponent of x_j in the generator led by x_i^{a_i}.
    """

    a: tuple
    aij: dict
    perm_case: str
    generators: tuple
    cycle: tuple = field(default=())

    def A(self, i: int, j: int) -> int:
        return self.aij[(i, j)]

    def labelled(self) -> dict:
        """Exponent names as strings, e.g. {'a1': 16, 'a21': 7, ...}."""
        out = {f"a{i}": v for i, v in enumerate(self.a, start=1)}
        out.update({f"a{i}{j}": v for (i, j), v in sorted(self.aij.items())})
        return out


def _pure_index(u):
    s = support(u)
    return next(iter(s)) if len(s) == 1 else None


def _split(mingens):
    """Map i -> (a_i, other monomial) for generators with a pure-power side."""
    led, rest = {}, []
    for b in mingens:
        hit = None
        for p, q in ((b.plus, b.minus), (b.minus, b.plus)):
            i = _pure_index(p)
            if i is not None and len(support(q)) == 2 and i not in support(q):
                hit = (i, p[i - 1], q)
                break
        if hit is None or hit[0] in led:
            rest.append(b)
        else:
            led[hit[0]] = hit[1:]
    return led, rest


def detect_bresinsky(g: GeneratorTuple, mingens, trace: list | None = None):
    """GorensteinData when the minimal generators have the five-binomial shape."""
    trace = trace if trace is not None else []
    if len(mingens) != 5:
        trace.append(f"{len(mingens)} minimal generators, need 5")
        return None
    led, rest = _split(mingens)
    if len(led) != 4 or len(rest) != 1:
        trace.append("no pure-power generator for every variable")
        return None
    c = {}
    for i, (_, q) in led.items():
        (missing,) = {1, 2, 3, 4} - support(q) - {i}
        c[i] = missing
    orbit = [1]
    while len(orbit) < 4:
        orbit.append(c[orbit[-1]])
    if len(set(orbit)) != 4 or c[orbit[-1]] != 1:
        trace.append(f"missing-variable map {c} is not a 4-cycle")
        return None
    label = CYCLE_LABELS[tuple(orbit)]
    a = tuple(led[i][0] for i in (1, 2, 3, 4))
    aij = {}
    for i, (_, q) in led.items():
        for j in support(q):
            aij[(i, j)] = q[j - 1]
    (i, j), (k, l) = FIFTH_PATTERN[label]
    plus = [0] * 4
    minus = [0] * 4
    plus[i - 1] = aij[(k, i)]
    plus[j - 1] = aij[(l, j)]
    minus[k - 1] = aij[(j, k)]
    minus[l - 1] = aij[(i, l)]
    f5 = Binomial(tuple(plus), tuple(minus))
    if f5.key() != rest[0].key():
        trace.append(f"fifth generator {rest[0]} differs from expected {f5}")
        return None
    gens = [Binomial(_pure(m, a[m - 1]), led[m][1]) for m in (1, 2, 3, 4)] + [f5]
    return GorensteinData(a, aij, label, tuple(gens), tuple(orbit))


def _pure(i, e):
    u = [0, 0, 0, 0]
    u[i - 1] = e
    return tuple(u)


def verify_relations(d: GorensteinData, g: GeneratorTuple) -> bool:
    """Check the four generator identities and the exponent splittings."""
    c = {d.cycle[k]: d.cycle[(k + 1) % 4] for k in range(4)}
    a = dict(zip((1, 2, 3, 4), d.a))
    A = d.aij
    try:
        for i in (1, 2, 3, 4):
            c1, c2, c3 = c[i], c[c[i]], c[c[c[i]]]
            n = a[c1] * a[c2] * A[(i, c3)] + A[(c2, c1)] * A[(i, c2)] * A[(c1, c3)]
            if n != g.gens[i - 1]:
                return False
            if a[i] != A[(c1, i)] + A[(c2, i)]:
                return False
    except KeyError:
        return False
    return all(0 < v < a[j] for (_, j), v in A.items())


def apery_standard_monomials(d: GorensteinData) -> MonomialIdeal:
    """Monomials in x2, x3, x4 whose complement gives the Apery set of n1.

    They are x2^{a2}, x3^{a3}, x4^{a4} and the x1-free sides of f1 and f5.
    """
    f1, f5 = d.generators[0], d.generators[4]
    side5 = f5.plus if f5.plus[0] == 0 else f5.minus
    gens = [f1.minus, side5] + [_pure(i, d.a[i - 1]) for i in (2, 3, 4)]
    return MonomialIdeal.of(gens)


def is_complete_intersection(g: GeneratorTuple, mingens) -> bool:
    return len(mingens) == 3


def apery_from_standard(d: GorensteinData, g: GeneratorTuple) -> list[int]:
    """S-degrees of the monomials x2^u2 x3^u3 x4^u4 outside the avoidance ideal."""
    I = apery_standard_monomials(d)
    out = []
    for u2 in range(d.a[1]):
        for u3 in range(d.a[2]):
            for u4 in range(d.a[3]):
                u = (0, u2, u3, u4)
                if u not in I:
                    out.append(g.sdeg(u))
    return sorted(out)
