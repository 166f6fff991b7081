"""Parametrized families of Gorenstein curves with known answers."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .binomials import Binomial, parse_mono, same_set
from .errors import InvalidGenerators
from .hilbert import IntPolynomial, MonomialIdeal
from .semigroup import GeneratorTuple

FAMILIES = ("e41", "gi", "e43")
MIN_PARAMETER = {"e41": 2, "gi": 0, "e43": 4}


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    parameter: int

    def __post_init__(self):
        if self.family_id not in FAMILIES:
            raise ValueError(f"unknown family {self.family_id!r}; choose from {FAMILIES}")
        lo = MIN_PARAMETER[self.family_id]
        if self.parameter < lo:
            raise ValueError(f"{self.family_id} needs parameter >= {lo}, got {self.parameter}")


@dataclass
class FamilyMember:
    spec: FamilySpec
    raw: tuple
    generators: GeneratorTuple
    expected_generators: list
    perm_case: str
    expected_cm: bool
    expected_lowest_forms: MonomialIdeal | None = None
    expected_numerator: IntPolynomial | None = None
    notes: list = field(default_factory=list)


def _b(text: str, **vals) -> Binomial:
    return Binomial.parse(text.format(**vals))


def _m(text: str, **vals):
    return parse_mono(text.format(**vals))


def e41_tuple(m: int) -> tuple:
    return (m**3 + m**2 - m, m**3 + 2 * m**2 + m - 1,
            m**3 + 3 * m**2 + 2 * m - 2, m**3 + 4 * m**2 + 3 * m - 2)


def gi_tuple(t: int) -> tuple:
    return (10 + 6 * t, 17 + 9 * t, 22 + 6 * t, 28 + 12 * t)


def e43_tuple(m: int) -> tuple:
    return (2 * m + 1, 2 * m + 3, 2 * m * m + m - 2, 2 * m * m + m - 1)


def e43_numerator(m: int) -> IntPolynomial:
    """1 + 3t + t^2 + ... + t^m + t^{m+2} + t^{m+4} + ... + t^{2m}."""
    terms = {0: 1, 1: 3}
    for k in range(2, m + 1):
        terms[k] = 1
    terms[m + 2] = 1
    for k in range(m + 4, 2 * m + 1):
        terms[k] = 1
    return IntPolynomial.from_terms(terms)


def instantiate(f: FamilySpec) -> FamilyMember:
    p = f.parameter
    if f.family_id == "e41":
        raw = e41_tuple(p)
        m = p
        gens = [_b("x1^{a} - x3*x4^{b}", a=m + 3, b=m - 1),
                _b("x2^{a} - x1^{b}*x4", a=m + 2, b=m + 2),
                _b("x3^{a} - x1*x2^{a}", a=m),
                _b("x4^{a} - x2^2*x3^{b}", a=m, b=m - 1),
                _b("x1^{a}*x3^{b} - x2^{c}*x4^{b}", a=m + 2, b=m - 1, c=m)]
        # for m = 2 the factor x4^{m-1} is x4^1
        return FamilyMember(f, raw, GeneratorTuple.from_input(raw), gens, "1a", True)
    if f.family_id == "gi":
        raw = gi_tuple(p)
        d = gcd(*raw)
        if d != 1:
            raise InvalidGenerators(f"gi at t = {p}: gcd{raw} = {d}, family requires gcd 1")
        notes = []
        if raw[1] > raw[2]:
            gens = [_b("x1^{a} - x2^{b}*x4", a=p + 5, b=p + 1),
                    _b("x2^{a} - x1^{b}*x3^2", a=p + 2, b=p + 1),
                    _b("x3^4 - x1^4*x4"),
                    _b("x4^2 - x2*x3^2"),
                    _b("x1^4*x2 - x3^2*x4")]
            case = "3a"
        else:
            gens = [_b("x1^{a} - x3^{b}*x4", a=p + 5, b=p + 1),
                    _b("x2^4 - x1^4*x4"),
                    _b("x3^{a} - x1^{b}*x2^2", a=p + 2, b=p + 1),
                    _b("x4^2 - x2^2*x3"),
                    _b("x1^4*x3 - x2^2*x4")]
            case = "1a"
        return FamilyMember(f, raw, GeneratorTuple.from_input(raw), gens, case, True, notes=notes)
    raw = e43_tuple(p)
    m = p
    gens = [_b("x1^{a} - x2*x3", a=m + 1),
            _b("x2^{a} - x1*x4", a=m),
            _b("x3^2 - x2^{a}*x4", a=m - 1),
            _b("x4^2 - x1^{a}*x3", a=m),
            _b("x1^{a}*x2^{b} - x3*x4", a=m, b=m - 1)]
    lowest = MonomialIdeal.of([
        _m("x2*x3"), _m("x3^2"), _m("x1*x4"), _m("x3*x4"), _m("x4^2"),
        _m("x2^{a}*x4", a=m), _m("x1^{a}*x3", a=m + 2), _m("x2^{a}", a=2 * m + 1)])
    return FamilyMember(f, raw, GeneratorTuple.from_input(raw), gens, "2b", False,
                        expected_lowest_forms=lowest, expected_numerator=e43_numerator(m))


@dataclass
class MemberCheck:
    spec: FamilySpec
    generators: tuple
    claims: list            # (name, expected, observed, ok)
    rejected: str | None = None

    @property
    def ok(self) -> bool:
        return self.rejected is None and all(c[3] for c in self.claims)

    def to_dict(self) -> dict:
        return {"family": self.spec.family_id, "parameter": self.spec.parameter,
                "generators": list(self.generators), "rejected": self.rejected,
                "ok": self.ok,
                "claims": [{"claim": n, "expected": str(e), "observed": str(o), "ok": k}
                           for n, e, o, k in self.claims]}


def verify_member(f: FamilySpec, run_oracle: bool = True) -> MemberCheck:
    """Run the full pipeline and compare with the family's stated properties."""
    from .analysis import analyze, binomial_from_json

    try:
        fm = instantiate(f)
    except InvalidGenerators as exc:
        return MemberCheck(f, gi_tuple(f.parameter) if f.family_id == "gi" else (), [], str(exc))
    rep = analyze(fm.raw, run_oracle=run_oracle)
    claims = []

    def claim(name, expected, observed):
        claims.append((name, expected, observed, expected == observed))

    mingens = [binomial_from_json(b) for b in rep.minimal_generators]
    claims.append(("minimal generators", [str(b) for b in fm.expected_generators],
                   [str(b) for b in mingens], same_set(mingens, fm.expected_generators)))
    claim("symmetric", True, rep.symmetric)
    claim("gorenstein shape", fm.perm_case, rep.gorenstein and rep.gorenstein["perm_case"])
    claim("cohen-macaulay", fm.expected_cm, rep.cm["is_cm"])
    tc = rep.tangent_cone
    if fm.expected_lowest_forms is not None:
        lowest = MonomialIdeal.of(tuple(b[0]) for b in tc["lowest_forms"] if b[1] is None)
        binom = [b for b in tc["lowest_forms"] if b[1] is not None]
        claim("lowest forms", str(fm.expected_lowest_forms), str(lowest) + ("" if not binom else " +binomials"))
        claim("leading ideal", str(fm.expected_lowest_forms),
              str(MonomialIdeal.of(tuple(u) for u in tc["leading_ideal"])))
    if fm.expected_numerator is not None:
        claim("reduced numerator", str(fm.expected_numerator), tc["reduced_numerator_text"])
        claim("multiplicity", fm.raw[0], tc["multiplicity"])
    claim("nonnegative numerator", True, all(c >= 0 for c in tc["reduced_numerator"]))
    claim("nondecreasing hilbert function", True, tc["nondecreasing"])
    return MemberCheck(f, tuple(fm.raw), claims)


def parse_range(text: str) -> list[int]:
    """'4..8' or '4' or '0,2' to a list of ints."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError(f"no parameters in {text!r}")
    return out
