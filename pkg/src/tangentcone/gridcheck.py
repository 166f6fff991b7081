"""Exhaustive cross-checks over all generator tuples up to a bound."""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import cmcheck, gorenstein, grobner, hilbert, toric
from .errors import BudgetExceeded, InvariantViolation, TangentConeError
from .semigroup import GeneratorTuple, apery_set, build_tables, is_symmetric

IE_MAX_GENS = 18
HORIZON = 20


def grid_tuples(top: int, bottom: int = 1):
    """All bottom <= n1 < n2 < n3 < n4 <= top with gcd 1, lexicographic."""
    for tup in itertools.combinations(range(bottom, top + 1), 4):
        if gcd(*tup) == 1:
            yield tup


@dataclass
class TupleCheck:
    gens: tuple
    case_label: str = ""
    degenerate: bool = False
    gorenstein: str | None = None
    is_cm: bool | None = None
    fast_methods: tuple = ()
    nondecreasing: bool | None = None
    ie_checked: bool = False
    lexinf_ok: bool | None = None
    anomalies: tuple = ()
    violations: list = field(default_factory=list)


def check_tuple(values, oracle_timeout: float = cmcheck.DEFAULT_TIMEOUT) -> TupleCheck:
    """Run every cross-check on one tuple and collect violations."""
    g = GeneratorTuple.from_input(values)
    out = TupleCheck(g.gens)
    bad = out.violations
    t = build_tables(g, max(g.oracle_limit + g.n1, (HORIZON + 1) * g.gens[3]))
    rep = toric.classify(g, t)
    mingens = rep.full_minimal_generators
    out.case_label, out.degenerate, out.anomalies = rep.case_label, rep.degenerate, tuple(rep.anomalies)

    # (a) two independent generating sets span the same ideal
    sat = toric.toric_generators_saturation(g)
    agree, why = toric.ideals_agree(g, sat, mingens)
    if not agree:
        bad.append(f"(a) saturation vs fiber: {why}")

    # (b) fast criteria against the oracle
    gdata = gorenstein.detect_bresinsky(g, mingens)
    out.gorenstein = gdata.perm_case if gdata else None
    try:
        verdict = cmcheck.decide(g, t, rep, gdata, run_oracle=True, timeout=oracle_timeout)
        out.is_cm = verdict.is_cm
        out.fast_methods = tuple(c["method"] for c in verdict.checks)
    except InvariantViolation as exc:
        bad.append(f"(b) {exc}")

    # (c), (d) Hilbert data of the tangent cone
    sb = grobner.tangent_cone_basis(mingens)
    lt = grobner.leading_term_ideal(sb)
    rec = hilbert.numerator(lt)
    if len(lt.gens) <= IE_MAX_GENS:
        out.ie_checked = True
        ie = hilbert.inclusion_exclusion_numerator(lt)
        if ie != rec:
            bad.append(f"(d) recursion {rec} != inclusion-exclusion {ie}")
    series = hilbert.series_coefficients(rec, 4, HORIZON)
    direct = hilbert.hf_values(lt, HORIZON)
    if series != direct:
        bad.append(f"(d) series {series} != direct count {direct}")
    ml = t.max_len
    by_length = [int(np.count_nonzero(ml == k)) for k in range(HORIZON + 1)]
    if by_length != direct:
        bad.append(f"(d) standard monomials {direct} != factorization lengths {by_length}")
    try:
        out.nondecreasing, _ = hilbert.is_nondecreasing(lt)
    except ValueError as exc:
        bad.append(f"(d) {exc}")
    if out.is_cm and out.nondecreasing is False:
        bad.append("(c) CM but the Hilbert function decreases")

    # (e) Apery set
    ap = apery_set(g, t)
    if len(ap) != g.n1:
        bad.append(f"(e) Apery set has {len(ap)} elements, expected {g.n1}")
    if gdata is not None:
        if not is_symmetric(g, t):
            bad.append("(e) Gorenstein shape on a non-symmetric semigroup")
        std = gorenstein.apery_from_standard(gdata, g)
        if std != ap:
            bad.append("(e) standard monomials of the avoidance ideal miss the Apery set")
        # the five generators are a lex-inf standard basis
        out.lexinf_ok = grobner.verify_prop_lexinf(gdata)
        if not out.lexinf_ok:
            bad.append(f"(8) S-pairs of the {gdata.perm_case} generators do not reduce to zero")
    return out


def _safe_check(values):
    try:
        return check_tuple(values)
    except (BudgetExceeded, TangentConeError) as exc:
        r = TupleCheck(tuple(sorted(values)))
        r.violations.append(f"error: {type(exc).__name__}: {exc}")
        return r


@dataclass
class GridSummary:
    top: int
    tuples: int = 0
    seconds: float = 0.0
    violations: list = field(default_factory=list)      # (gens, message)
    cases: Counter = field(default_factory=Counter)
    gorenstein: list = field(default_factory=list)      # (gens, perm_case, lexinf_ok)
    fast_verdicts: Counter = field(default_factory=Counter)
    ie_skipped: int = 0
    degenerate: int = 0
    anomalies: list = field(default_factory=list)

    def add(self, r: TupleCheck):
        self.tuples += 1
        self.cases[r.case_label] += 1
        self.violations.extend((r.gens, v) for v in r.violations)
        if r.gorenstein:
            self.gorenstein.append((r.gens, r.gorenstein, r.lexinf_ok))
        for m in r.fast_methods:
            self.fast_verdicts[m.split("(")[0]] += 1
        self.ie_skipped += not r.ie_checked
        self.degenerate += r.degenerate
        if r.anomalies and not r.degenerate:
            self.anomalies.append((r.gens, r.anomalies))

    def lines(self) -> list[str]:
        return [
            f"tuples checked: {self.tuples} (n4 <= {self.top}) in {self.seconds:.1f} s",
            f"violations: {len(self.violations)}",
            f"cases: {dict(sorted(self.cases.items()))}",
            f"degenerate (some a_i = 1): {self.degenerate}",
            f"gorenstein shapes: {len(self.gorenstein)}, lex-inf failures: "
            f"{sum(1 for *_, ok in self.gorenstein if not ok)}",
            f"fast verdicts cross-checked: {dict(sorted(self.fast_verdicts.items()))}",
            f"inclusion-exclusion skipped (> {IE_MAX_GENS} generators): {self.ie_skipped}",
            f"other anomalies: {len(self.anomalies)}",
        ]


def run_grid(top: int, jobs: int = 1, bottom: int = 1, progress=None) -> GridSummary:
    """Check every tuple with n4 <= top; ``jobs`` > 1 uses a process pool."""
    summary = GridSummary(top)
    t0 = time.perf_counter()
    tuples = grid_tuples(top, bottom)
    if jobs > 1:
        from multiprocessing import Pool
        with Pool(jobs) as pool:
            for r in pool.imap(_safe_check, tuples, chunksize=256):
                summary.add(r)
                if progress and summary.tuples % 10000 == 0:
                    progress(summary)
    else:
        for tup in tuples:
            summary.add(_safe_check(tup))
            if progress and summary.tuples % 10000 == 0:
                progress(summary)
    summary.seconds = time.perf_counter() - t0
    return summary


def main(argv=None) -> int:
    import argparse
    import os

    p = argparse.ArgumentParser(description="cross-check every tuple with n4 <= TOP")
    p.add_argument("--top", type=int, default=60)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = p.parse_args(argv)
    s = run_grid(args.top, args.jobs,
                 progress=lambda s: print(f"  ... {s.tuples} tuples", flush=True))
    for line in s.lines():
        print(line)
    for gens, msg in s.violations[:50]:
        print(f"VIOLATION {gens}: {msg}")
    return 1 if s.violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
