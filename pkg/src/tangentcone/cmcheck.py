"""Cohen-Macaulayness of the tangent cone: exact oracle and case criteria."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .binomials import deg, sdeg
from .errors import BudgetExceeded, InvariantViolation, PreconditionError
from .gorenstein import GorensteinData
from .semigroup import GeneratorTuple, MembershipTables, build_tables, factorizations
from .toric import CaseReport, critical_monomial

DEFAULT_TIMEOUT = 300.0


@dataclass
class CMVerdict:
    """``is_cm`` is None only for an undecided result.

    A not-CM certificate from a sweep is a dict with the triple ``v``, its
    S-degree ``m`` and ``bound`` = 1 + max length of m - n1 (the longest
    factorization of m using x1).
    """

    is_cm: bool | None
    method: str
    certificate: dict | None = None
    trace: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"is_cm": self.is_cm, "method": self.method,
                "certificate": self.certificate, "trace": list(self.trace),
                "checks": [dict(c) for c in self.checks]}


# -- exact oracle ------------------------------------------------------------

def _sweep(g, t, lo, hi, strict=False):
    """First bad triple in lo <= v < hi, clipped to the box; None when clean."""
    box = g.box_bounds
    hi = [min(h, b) for h, b in zip(hi, box)]
    lo = [max(x, 0) for x in lo]
    if any(x >= h for x, h in zip(lo, hi)):
        return None
    found, v2, v3, v4, m, bound = _kernels.sweep_box(
        g.array(), np.array(lo, dtype=np.int64), np.array(hi, dtype=np.int64),
        t.in_S.view(np.uint8), t.max_len, strict)
    if not found:
        return None
    return {"v": [int(v2), int(v3), int(v4)], "m": int(m), "bound": int(bound)}


def herzog_oracle(g: GeneratorTuple, t: MembershipTables | None = None,
                  timeout: float = DEFAULT_TIMEOUT) -> CMVerdict:
    """Exhaustive check over v_i < n1 / gcd(n1, n_i).

    x2^v2 x3^v3 x4^v4 of S-degree m in n1 + S needs a factorization of m
    using x1 of length at least v2 + v3 + v4; the longest such one has
    length 1 + max_len[m - n1].  Triples outside the box never fail since
    x_i^{b_i} can be traded for a longer power of x1.
    """
    t = t or build_tables(g)
    if t.limit < g.oracle_limit:
        raise PreconditionError(f"tables reach {t.limit}, oracle needs {g.oracle_limit}")
    b2, b3, b4 = g.box_bounds
    start = time.monotonic()
    v4, step = 0, 1
    while v4 < b4:
        top = min(b4, v4 + step)
        t0 = time.monotonic()
        cert = _sweep(g, t, (0, 0, v4), (b2, b3, top))
        if cert:
            return CMVerdict(False, "herzog_oracle", cert,
                             [f"v = {cert['v']}: degree {sum(cert['v'])} > {cert['bound']}"])
        v4 = top
        spent = time.monotonic() - t0
        if time.monotonic() - start > timeout:
            raise BudgetExceeded(f"oracle exceeded {timeout} s at v4 = {v4} of {b4}")
        if spent < 0.05:
            step *= 2
    return CMVerdict(True, "herzog_oracle", None, [f"box {b2}x{b3}x{b4} exhausted"])


def certificate_holds(g: GeneratorTuple, cert: dict) -> bool:
    """Recheck a not-CM triple by enumerating the factorizations of m."""
    v = cert["v"]
    m = sdeg((0, *v), g.gens)
    if m != cert["m"] or m < g.n1:
        return False
    longest = max((sum(w) for w in factorizations(g, m) if w[0] > 0), default=None)
    return longest is not None and longest < sum(v)


def _tables_for(g, t, m):
    return t if m <= t.limit else build_tables(g, max(m, 2 * t.limit))


def good_monomial(g: GeneratorTuple, t: MembershipTables, v) -> bool:
    """x2^v2 x3^v3 x4^v4 equals a monomial using x1 of no smaller degree."""
    v = tuple(v)
    m = v[0] * g.gens[1] + v[1] * g.gens[2] + v[2] * g.gens[3]
    t = _tables_for(g, t, m)
    ell = t.length(m - g.n1) if m >= g.n1 else None
    if ell is None:
        raise PreconditionError(f"S-degree {m} of {v} is not in n1 + S")
    return sum(v) <= 1 + ell


# -- Gorenstein closed forms ---------------------------------------------------

class _Trace:
    def __init__(self, d: GorensteinData):
        self.v = d.labelled()
        self.lines = []
        self.failed = []

    def le(self, name, lhs, rhs):
        """Record lhs <= rhs, both given as '+'-joined symbol sums with integer terms."""
        lv, rv = self._eval(lhs), self._eval(rhs)
        ok = lv <= rv
        self.lines.append(f"{lhs} = {lv} <= {rv} = {rhs}: {'yes' if ok else 'no'}")
        if not ok:
            self.failed.append(name)
        return ok

    def lt(self, lhs, rhs):
        lv, rv = self._eval(lhs), self._eval(rhs)
        self.lines.append(f"{lhs} = {lv} < {rv} = {rhs}: {'yes' if lv < rv else 'no'}")
        return lv < rv

    def _eval(self, expr):
        total = 0
        for tok in expr.replace("-", "+-").split("+"):
            tok = tok.strip()
            if not tok:
                continue
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("-").strip()
            coef = 1
            if tok[0].isdigit() and not tok.startswith("a"):
                coef, tok = int(tok[0]), tok[1:]
            total += sign * coef * self.v[tok]
        return total


def closed_form_criterion(d: GorensteinData) -> CMVerdict | None:
    """Inequality criteria for the six labelled shapes.

    Returns a verdict when the branch has an exact characterization, or
    when a necessary inequality fails; None otherwise.
    """
    tr = _Trace(d)
    case = d.perm_case
    exact = True
    if case == "1a":
        tr.le("c1", "a2", "a21+a24")
    elif case == "1b":
        tr.le("c1", "a2", "a21+a23")
        tr.le("c2", "a42+a13", "a21+a34")
        if d.A(4, 2) <= d.A(3, 2):
            if tr.lt("a34", "a14"):
                tr.le("c3", "a3+a13", "a21+a32-a42+2a34")
            else:
                tr.le("c3", "a3+a13", "a1+a32+a34-a14")
        else:
            tr.le("c3", "a3+a13", "a1+a32+a34-a14")
            exact = d.A(1, 4) <= d.A(3, 4)
    elif case == "2a":
        tr.le("c1", "a3", "a31+a34")
        tr.le("c2", "a12+a34", "a41+a23")
        if d.A(3, 4) <= d.A(2, 4):
            if tr.lt("a23", "a13"):
                tr.le("c3", "a2+a12", "a41+2a23+a24-a34")
            else:
                tr.le("c3", "a2+a12", "a1+a23-a13+a24")
        else:
            tr.le("c3", "a2+a12", "a1+a23-a13+a24")
            exact = d.A(1, 3) <= d.A(2, 3)
    elif case == "2b":
        tr.le("c1", "a2", "a21+a24")
        if d.A(2, 4) <= d.A(3, 4):
            if tr.lt("a32", "a12"):
                tr.le("c2", "a3+a13", "a41+2a32+a34-a24")
            else:
                tr.le("c2", "a3+a13", "a1+a32-a12+a34")
        else:
            tr.le("c2", "a3+a13", "a1+a32-a12+a34")
            exact = d.A(1, 2) <= d.A(3, 2)
    elif case == "3a":
        tr.le("c1", "a2", "a21+a23")
        tr.le("c2", "a3", "a31+a34")
    elif case == "3b":
        tr.le("c1", "a12+a43", "a31+a24")
        if d.A(4, 3) <= d.A(2, 3):
            if tr.lt("a24", "a14"):
                tr.le("c2", "a2+a12", "a31+2a24+a23-a43")
            else:
                tr.le("c2", "a2+a12", "a1+a23+a24-a14")
        else:
            tr.le("c2", "a2+a12", "a1+a23+a24-a14")
            exact = d.A(1, 4) <= d.A(2, 4)
    else:
        raise ValueError(f"unknown shape {case!r}")
    method = f"closed_form({case})"
    if tr.failed:
        return CMVerdict(False, method, {"failed": tr.failed}, tr.lines)
    if not exact:
        tr.lines.append("necessary conditions hold; this branch has no exact criterion")
        return None
    return CMVerdict(True, method, None, tr.lines)


# -- predicates from the critical-binomial cases ------------------------------

def _cond_I(report: CaseReport, trace) -> bool:
    for f in report.set_I:
        M, N = (f.plus, f.minus) if f.plus[0] else (f.minus, f.plus)
        if M[0] and deg(N) > deg(M):
            trace.append(f"I-condition fails at {f}")
            return False
    trace.append(f"I-condition holds on {len(report.set_I)} binomials")
    return True


def _cond_R(g, t, report: CaseReport, trace) -> bool:
    for f in report.set_R:
        M, N = (f.plus, f.minus) if f.plus[0] else (f.minus, f.plus)
        if M[0] and not good_monomial(g, t, N[1:]):
            trace.append(f"R-condition fails at {f}")
            return False
    trace.append(f"R-condition holds on {len(report.set_R)} binomials")
    return True


def _region(lo=None, hi=None):
    """Bounds per x2, x3, x4 from {index: bound} maps (1-based indices 2..4)."""
    big = 1 << 40
    L = [0, 0, 0]
    H = [big, big, big]
    for k, v in (lo or {}).items():
        L[k - 2] = v
    for k, v in (hi or {}).items():
        H[k - 2] = v
    return L, H


def _cond_sweep(g, t, trace, label, lo=None, hi=None, strict=False) -> bool:
    L, H = _region(lo, hi)
    cert = _sweep(g, t, L, H, strict)
    if cert:
        trace.append(f"sweep {label} fails at v = {cert['v']}")
        return False
    trace.append(f"sweep {label} clean")
    return True


def appendix_predicates(report: CaseReport, g: GeneratorTuple,
                        t: MembershipTables) -> CMVerdict | None:
    """Exact criteria for the cases other than 1, or None when no shape applies."""
    if report.degenerate:
        return None
    label, a, roles = report.case_label, report.a_values, report.roles
    A = dict(zip((1, 2, 3, 4), a))
    trace = []
    method = f"appendix_predicate({label})"
    if label == "2c":
        return CMVerdict(True, method, None, ["complete intersection of pure-power differences"])
    if label in ("2a", "2b"):
        i, j, k = roles["partner"], roles["j"], roles["k"]
        if label == "2a" and roles.get("third") not in ("x1", "xj"):
            return None
        strict = label == "2a" and roles.get("third") == "xj"
        ok = (_cond_I(report, trace) and _cond_R(g, t, report, trace)
              and _cond_sweep(g, t, trace, f"v{i}<a{i}, v{j}>=a{j}, v{k}<a{k}",
                              lo={j: A[j]}, hi={i: A[i], k: A[k]}, strict=strict))
        return CMVerdict(ok, method, None, trace)
    if label == "3":
        block, odd = roles["block"], roles["odd"]
        if odd == 1:
            ok = _cond_I(report, trace) and _cond_sweep(g, t, trace, "v2>=a2", lo={2: A[2]})
            return CMVerdict(ok, method, None, trace)
        i, j = sorted(x for x in block if x != 1)
        ok = _cond_sweep(g, t, trace, f"v{i}<a{i}, v{j}<a{j}", hi={i: A[i], j: A[j]})
        return CMVerdict(ok, method, None, trace)
    if label in ("4a", "4b"):
        pair = roles["pair"]
        if 1 not in pair:
            return None
        i = pair[1]
        ok = _cond_sweep(g, t, trace, f"z{i}<a{i}", hi={i: A[i]})
        return CMVerdict(ok, method, None, trace)
    return None


def case1_sufficient(report: CaseReport, g: GeneratorTuple,
                     t: MembershipTables) -> CMVerdict | None:
    """Sufficient conditions for case 1; CM or None, never not-CM."""
    if report.case_label != "1" or report.degenerate:
        return None
    S = report.critical_generators
    v, w, z = (critical_monomial(S, i) for i in (2, 3, 4))
    if v is None or w is None or z is None:
        return None
    a = dict(zip((1, 2, 3, 4), report.a_values))
    in_w, in_z = w[0] > 0, z[0] > 0
    trace = []
    ok = False
    if v[0] > 0:
        first = a[2] <= deg(v)
        trace.append(f"a2 = {a[2]} <= deg v = {deg(v)}: {first}")
        if in_w and in_z:
            branch = "v1(i)"
            ok = (first and a[3] <= deg(w) and _cond_I(report, trace))
        elif in_w:
            branch = "v1(ii)"
            ok = (first and a[3] <= deg(w)
                  and _cond_sweep(g, t, trace, "d2<a2, d3<a3", hi={2: a[2], 3: a[3]}))
        elif in_z:
            branch = "v1(iii)"
            ok = first and _cond_sweep(g, t, trace, "d2<a2, d4<a4", hi={2: a[2], 4: a[4]})
        else:
            branch = "v1(iv)"
            ok = first and _cond_sweep(g, t, trace, "d2<a2", hi={2: a[2]})
    else:
        if in_w and in_z:
            branch = "v0(i)"
            ok = (a[3] <= deg(w) and _cond_I(report, trace)
                  and _cond_sweep(g, t, trace, "d2>=a2, d3<a3, d4<a4",
                                  lo={2: a[2]}, hi={3: a[3], 4: a[4]}))
        elif in_w:
            branch = "v0(ii)"
            ok = a[3] <= deg(w) and _cond_sweep(g, t, trace, "d3<a3", hi={3: a[3]})
        elif in_z:
            branch = "v0(iii)"
            ok = _cond_sweep(g, t, trace, "d4<a4", hi={4: a[4]})
        else:
            return None
    trace.insert(0, f"branch {branch}")
    return CMVerdict(True, f"case1_sufficient({branch})", None, trace) if ok else None


# -- orchestration ---------------------------------------------------------------

def fast_paths(report: CaseReport, g, t, gdata: GorensteinData | None) -> list[CMVerdict]:
    out = []
    if gdata is not None:
        v = closed_form_criterion(gdata)
        if v is not None:
            out.append(v)
    for fn in (appendix_predicates, case1_sufficient):
        v = fn(report, g, t)
        if v is not None:
            out.append(v)
    return out


def decide(g: GeneratorTuple, t: MembershipTables | None = None,
           report: CaseReport | None = None, gdata: GorensteinData | None = None,
           run_oracle: bool = True, timeout: float = DEFAULT_TIMEOUT) -> CMVerdict:
    """Fast criteria cross-checked against the oracle.

    Any disagreement raises InvariantViolation.  Without the oracle the
    first definitive fast path answers, or the result is undecided.
    """
    from .toric import classify
    from .gorenstein import detect_bresinsky

    t = t or build_tables(g)
    report = report or classify(g, t)
    if gdata is None:
        gdata = detect_bresinsky(g, report.full_minimal_generators)
    fast = fast_paths(report, g, t, gdata)
    checks = [{"method": v.method, "is_cm": v.is_cm} for v in fast]
    if not run_oracle:
        if fast:
            best = fast[0]
            best.checks = checks
            return best
        return CMVerdict(None, "undecided", None, ["no criterion applies and the oracle was skipped"])
    oracle = herzog_oracle(g, t, timeout)
    for v in fast:
        if v.is_cm != oracle.is_cm:
            raise InvariantViolation(
                f"{v.method} says {'CM' if v.is_cm else 'not CM'} but the oracle says "
                f"{'CM' if oracle.is_cm else 'not CM'} for {g.gens}; trace: {v.trace}")
    oracle.checks = checks
    return oracle
