"""Command-line front end.

Exit codes: 0 success, 1 a family claim did not verify, 2 invalid input,
3 budget exhausted, 4 internal invariant violated (criterion and oracle
disagree).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import cmcheck
from .errors import (BudgetExceeded, InvalidGenerators, InvariantViolation,
                     TableTooLarge)
from .semigroup import MAX_TABLE_ENTRIES

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3, 4
BYTES_PER_ENTRY = 9          # uint8 membership + int64 maximal length
SWEEP_MAX_N4 = 400

SWEEP_COLUMNS = (
    "n1", "n2", "n3", "n4", "case", "mu", "num_generators", "symmetric",
    "gorenstein", "cm", "cm_method", "fast_verdicts", "nondecreasing",
    "reduced_numerator",
)


def _entries(max_table_bytes: int | None) -> int:
    if max_table_bytes is None:
        return MAX_TABLE_ENTRIES
    return max(1, max_table_bytes // BYTES_PER_ENTRY)


def _summary(rep) -> str:
    lines = [
        f"generators   {tuple(rep.sorted)}" + ("" if rep.sorted == rep.input else f" (input {tuple(rep.input)})"),
        f"a-values     {tuple(rep.a_values)}",
        f"case         {rep.case_label}   mu = {rep.mu}" + ("   degenerate" if rep.degenerate else ""),
        f"symmetric    {rep.symmetric}   frobenius = {rep.frobenius}",
        "minimal generators:",
    ]
    from .analysis import binomial_from_json
    lines += [f"  {binomial_from_json(b)}" for b in rep.minimal_generators]
    if rep.gorenstein:
        lines.append(f"gorenstein   shape {rep.gorenstein['perm_case']}")
    cm = rep.cm
    word = {True: "CM", False: "not CM", None: "undecided"}[cm["is_cm"]]
    lines.append(f"tangent cone {word} via {cm['method']}")
    if cm["certificate"]:
        lines.append(f"  certificate {cm['certificate']}")
    for c in cm["checks"]:
        lines.append(f"  agrees: {c['method']} -> {c['is_cm']}")
    tc = rep.tangent_cone
    if tc:
        lines.append(f"hilbert      h(t) = {tc['reduced_numerator_text']}   h(1) = {tc['multiplicity']}")
        lines.append(f"  nondecreasing: {tc['nondecreasing']} ({tc['nondecreasing_reason']})")
        lines.append(f"  HF: {rep.hf}")
    for a in rep.anomalies:
        lines.append(f"note: {a}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    from .analysis import analyze
    rep = analyze(args.n, horizon=args.horizon, run_oracle=not args.skip_oracle,
                  timeout=args.timeout_secs, max_entries=_entries(args.max_table_bytes))
    print(rep.to_json() if args.json else _summary(rep))
    return EXIT_OK


def sweep_row(tup, timeout: float = cmcheck.DEFAULT_TIMEOUT) -> dict:
    """One CSV row for a generator tuple."""
    from .analysis import analyze
    row = dict(zip(("n1", "n2", "n3", "n4"), tup))
    try:
        rep = analyze(tup, horizon=0, timeout=timeout)
    except (BudgetExceeded, TableTooLarge) as exc:
        row.update(case="", mu="", num_generators="", symmetric="", gorenstein="",
                   cm="budget", cm_method=str(exc), fast_verdicts="",
                   nondecreasing="", reduced_numerator="")
        return row
    tc = rep.tangent_cone
    row.update(
        case=rep.case_label, mu=rep.mu, num_generators=len(rep.minimal_generators),
        symmetric=int(rep.symmetric),
        gorenstein=rep.gorenstein["perm_case"] if rep.gorenstein else "",
        cm=int(rep.cm["is_cm"]), cm_method=rep.cm["method"],
        fast_verdicts=";".join(f"{c['method']}={int(c['is_cm'])}" for c in rep.cm["checks"]),
        nondecreasing=int(tc["nondecreasing"]),
        reduced_numerator=" ".join(str(c) for c in tc["reduced_numerator"]),
    )
    return row


def _keep(row, args) -> bool:
    if row["cm"] == "budget":
        return not (args.gorenstein_only or args.non_cm_only or args.nondecreasing_only)
    if args.gorenstein_only and not row["gorenstein"]:
        return False
    if args.non_cm_only and row["cm"] != 0:
        return False
    if args.nondecreasing_only and row["nondecreasing"] != 1:
        return False
    return True


def cmd_sweep(args) -> int:
    from .gridcheck import grid_tuples
    if args.max > SWEEP_MAX_N4:
        raise InvalidGenerators(f"--max {args.max} exceeds the sweep cap n4 <= {SWEEP_MAX_N4}")
    if args.min < 1:
        raise InvalidGenerators("--min must be at least 1")
    try:
        fh = open(args.output, "w", newline="")
    except OSError as exc:
        raise InvalidGenerators(f"cannot write {args.output}: {exc.strerror}") from None
    with fh:
        w = csv.DictWriter(fh, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
        w.writeheader()
        tuples = grid_tuples(args.max, args.min)
        if args.jobs > 1:
            from multiprocessing import Pool
            with Pool(args.jobs) as pool:
                rows = pool.imap(sweep_row, tuples, chunksize=64)
                n = _write_rows(w, rows, args)
        else:
            n = _write_rows(w, map(sweep_row, tuples), args)
    print(f"{n} rows written to {args.output}", file=sys.stderr)
    return EXIT_OK


def _write_rows(w, rows, args) -> int:
    n = 0
    for row in rows:
        if _keep(row, args):
            w.writerow(row)
            n += 1
    return n


def cmd_family(args) -> int:
    from .families import FamilySpec, parse_range, verify_member
    text = args.m if args.m is not None else args.t
    if text is None:
        raise InvalidGenerators("give a parameter range with --m or --t, e.g. --m 4..6")
    try:
        params = parse_range(text)
        specs = [FamilySpec(args.family, p) for p in params]
    except ValueError as exc:
        raise InvalidGenerators(str(exc)) from None
    results = [verify_member(s, run_oracle=not args.skip_oracle) for s in specs]
    if args.json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        name = "t" if args.family == "gi" else "m"
        for r in results:
            head = f"{args.family} {name}={r.spec.parameter} {r.generators}"
            if r.rejected:
                print(f"{head}: rejected ({r.rejected})")
                continue
            print(f"{head}: {'all claims verified' if r.ok else 'MISMATCH'}")
            for claim, exp, obs, ok in r.claims:
                mark = "ok " if ok else "BAD"
                print(f"  [{mark}] {claim}: {obs}" + ("" if ok else f" (expected {exp})"))
    if any(r.rejected is None and not r.ok for r in results):
        return EXIT_MISMATCH
    if all(r.rejected for r in results):
        return EXIT_INPUT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tangentcone",
                                description="Tangent cones of monomial curves in affine 4-space.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one generator tuple")
    a.add_argument("n", nargs=4, type=int, metavar="N")
    a.add_argument("--json", action="store_true", help="print the JSON report")
    a.add_argument("--horizon", type=int, default=20, help="Hilbert function values 0..K")
    a.add_argument("--skip-oracle", action="store_true",
                   help="answer from the case criteria only")
    a.add_argument("--timeout-secs", type=float, default=cmcheck.DEFAULT_TIMEOUT)
    a.add_argument("--max-table-bytes", type=int, default=None,
                   help=f"memory cap for semigroup tables (default {MAX_TABLE_ENTRIES * BYTES_PER_ENTRY})")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="CSV over all tuples MIN <= n1 < ... < n4 <= MAX")
    s.add_argument("--min", type=int, required=True)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--gorenstein-only", action="store_true")
    s.add_argument("--non-cm-only", action="store_true")
    s.add_argument("--nondecreasing-only", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_sweep)

    f = sub.add_parser("family", help="verify members of a parametrized family")
    f.add_argument("family", choices=("e41", "gi", "e43"))
    f.add_argument("--m", help="parameter range, e.g. 4..8")
    f.add_argument("--t", help="alias of --m")
    f.add_argument("--json", action="store_true")
    f.add_argument("--skip-oracle", action="store_true")
    f.set_defaults(func=cmd_family)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidGenerators as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, TableTooLarge) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
