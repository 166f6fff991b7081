"""Full per-curve pipeline and its JSON report."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

import numpy as np

from . import cmcheck, gorenstein, grobner, hilbert, toric
from .binomials import Binomial
from .semigroup import (GeneratorTuple, apery_set, build_tables, frobenius,
                        is_symmetric)

SCHEMA_VERSION = 1
SCHEMA_PATH = Path(__file__).with_name("report_schema.json")


def _bin(b: Binomial) -> list:
    return [list(b.plus), None if b.minus is None else list(b.minus)]


def binomial_from_json(pair) -> Binomial:
    plus, minus = pair
    return Binomial(tuple(plus), None if minus is None else tuple(minus))


@dataclass
class AnalysisReport:
    """Everything computed for one generator tuple, as JSON-ready values."""

    schema_version: int
    input: list
    sorted: list
    permutation: list
    a_values: list
    case_label: str
    mu: int
    degenerate: bool
    minimal_generators: list
    critical_generators: list
    set_I: list
    set_R: list
    betti_degrees: list
    symmetric: bool
    frobenius: int
    complete_intersection: bool
    gorenstein: dict | None
    cm: dict
    tangent_cone: dict | None
    hf: list
    anomalies: list
    timings: dict = field(default_factory=dict)

    def payload(self) -> dict:
        """Deterministic content: everything except timings."""
        d = asdict(self)
        d.pop("timings")
        return d

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict() if timings else self.payload(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> AnalysisReport:
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))


def tangent_cone_data(g: GeneratorTuple, mingens, horizon: int, budget: int = 10**6) -> dict:
    """Standard basis under negative degree, lowest forms and Hilbert data."""
    sb = grobner.tangent_cone_basis(mingens, budget=budget)
    lowest = grobner.lowest_forms_ideal(sb)
    lt = grobner.leading_term_ideal(sb)
    num = hilbert.numerator(lt)
    h = hilbert.reduced_numerator(lt, 1)
    nondecr, reason = hilbert.is_nondecreasing(lt)
    return {
        "standard_basis": [_bin(b) for b in sb.basis],
        "lowest_forms": [_bin(b) for b in lowest],
        "leading_ideal": [list(u) for u in lt.gens],
        "numerator": list(num.coefficients),
        "reduced_numerator": list(h.coefficients),
        "reduced_numerator_text": str(h),
        "multiplicity": h(1),
        "nondecreasing": nondecr,
        "nondecreasing_reason": reason,
        "hf": hilbert.hf_values(lt, horizon),
    }


def hf_from_lengths(g: GeneratorTuple, horizon: int) -> list[int]:
    """HF(k) = number of s in S whose longest factorization has length k."""
    t = build_tables(g, (horizon + 1) * g.gens[3])
    ml = t.max_len
    return [int(np.count_nonzero(ml == k)) for k in range(horizon + 1)]


def analyze(values, horizon: int = 20, run_oracle: bool = True,
            timeout: float = cmcheck.DEFAULT_TIMEOUT, hilbert_series: bool = True,
            max_entries: int | None = None) -> AnalysisReport:
    """Classification, Gorenstein shape, CM decision and Hilbert data."""
    clock = {}
    t0 = time.perf_counter()
    g = GeneratorTuple.from_input(values)
    t = build_tables(g) if max_entries is None else build_tables(g, max_entries=max_entries)
    clock["tables"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    report = toric.classify(g, t)
    mingens = report.full_minimal_generators
    clock["classify"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    gdata = gorenstein.detect_bresinsky(g, mingens)
    gjson = None
    if gdata is not None:
        gjson = {
            "perm_case": gdata.perm_case,
            "exponents": gdata.labelled(),
            "generators": [_bin(b) for b in gdata.generators],
            "generators_text": [str(b) for b in gdata.generators],
            "relations_hold": gorenstein.verify_relations(gdata, g),
        }
    clock["gorenstein"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    verdict = cmcheck.decide(g, t, report, gdata, run_oracle=run_oracle, timeout=timeout)
    clock["cm"] = time.perf_counter() - t0

    tc, hf = None, []
    if hilbert_series:
        t0 = time.perf_counter()
        tc = tangent_cone_data(g, mingens, horizon)
        hf = tc.pop("hf")
        clock["hilbert"] = time.perf_counter() - t0

    return AnalysisReport(
        schema_version=SCHEMA_VERSION,
        input=[int(x) for x in values],
        sorted=list(g.gens),
        permutation=list(g.original_order),
        a_values=list(report.a_values),
        case_label=report.case_label,
        mu=report.mu,
        degenerate=report.degenerate,
        minimal_generators=[_bin(b) for b in mingens],
        critical_generators=[_bin(b) for b in report.critical_generators],
        set_I=[_bin(b) for b in report.set_I],
        set_R=[_bin(b) for b in report.set_R],
        betti_degrees=list(report.betti_degrees),
        symmetric=is_symmetric(g, t),
        frobenius=frobenius(g, t),
        complete_intersection=gorenstein.is_complete_intersection(g, mingens),
        gorenstein=gjson,
        cm=verdict.to_dict(),
        tangent_cone=tc,
        hf=hf,
        anomalies=list(report.anomalies),
        timings={k: round(v, 6) for k, v in clock.items()},
    )


def load_schema() -> dict:
    return json.loads(SCHEMA_PATH.read_text())


__all__ = ["AnalysisReport", "analyze", "tangent_cone_data", "hf_from_lengths",
           "binomial_from_json", "load_schema", "SCHEMA_VERSION", "apery_set"]
