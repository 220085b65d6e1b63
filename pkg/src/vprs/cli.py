"""Command-line interface.

Exit codes: 0 success, 1 validation error, 2 unreadable input or bad
arguments, 3 a law or structural check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .approximation import Approximation, sweep, thresholds, vprs, vprsve
from .core import Partition, Subset, as_precision
from .errors import ParseError, ValidationError, VprsError
from .ingestion import indiscernibility, parse_instance, parse_table, target_from_decision
from .lattice import cayley, check_laws, closure, family, join, meet, parse_grid
from .verify import check_instance

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_FAILED = 0, 1, 2, 3
REGIONS = ("lower", "upper", "D", "BN", "N")


def frac(x: Fraction) -> str:
    return str(Fraction(x))


def block_name(b: int) -> str:
    return f"E{b + 1}"


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("-i", "--input", metavar="PATH", help="JSON instance document")
    src.add_argument("--table", metavar="PATH", help="CSV information table")
    common.add_argument("--attrs", help="table mode: comma-separated condition attributes")
    common.add_argument("--decision", metavar="COL=VALUE", help="table mode: target selector")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _ArgParser(prog="vprs", description="Rough, VPRS and VPRSVE approximations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    p = sub.add_parser("regions", parents=[common], help="lower/upper approximations and regions")
    p.add_argument("--beta", default="0", help="classification error, e.g. 1/4 (default 0)")
    p.add_argument("--gamma", help="separate error for the upper approximation")
    sub.add_parser("thresholds", parents=[common], help="overlap degrees and critical betas")
    sub.add_parser("sweep", parents=[common], help="one row per critical beta")
    p = sub.add_parser("lattice", parents=[common], help="join/meet closure and law check")
    p.add_argument("--grid", required=True, help="comma-separated betas, e.g. 0,1/4,1/3,1/2")
    sub.add_parser("check", parents=[common], help="run every structural check")
    return parser


def _precision_arg(text: str, name: str, warn) -> Fraction:
    value = as_precision(text)
    if "." in text:
        msg = f"note: --{name} {text} read exactly as {frac(value)}"
        near = value.limit_denominator(12)
        if near != value and abs(near - value) < Fraction(1, 100):
            msg += f" (not {frac(near)})"
        warn(msg)
    return value


def load(args) -> tuple[Partition, Subset, str]:
    """Read the input named by ``args`` and return (partition, target, label)."""
    path = Path(args.input or args.table)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if args.input:
        if args.attrs or args.decision:
            raise ParseError("--attrs/--decision only apply to --table input")
        spec = parse_instance(text)
        partition, target = spec.build()
        return partition, target, spec.name or path.stem
    if not args.attrs or not args.decision:
        raise ParseError("--table needs both --attrs and --decision")
    col, sep, value = args.decision.partition("=")
    if not sep or not col:
        raise ParseError(f"--decision must look like COLUMN=VALUE, got {args.decision!r}")
    table = parse_table(text, decision=col)
    attrs = [a.strip() for a in args.attrs.split(",")]
    return indiscernibility(table, attrs), target_from_decision(table, col, value), path.stem


def _legend(partition: Partition) -> list[str]:
    return [f"  {block_name(b)}: {' '.join(partition.block_labels(b))}" for b in range(len(partition))]


def _blockset(blocks: Sequence[int]) -> str:
    return "{" + ", ".join(block_name(b) for b in blocks) + "}"


def _region_json(approx: Approximation, region: str) -> dict:
    s = approx.regions()[region]
    return {"blocks": [b + 1 for b in approx.partition.blocks_within(s)], "elements": s.labels()}


def _header(partition, target, label) -> list[str]:
    return [
        f"instance: {label} ({len(partition.universe)} elements, {len(partition)} blocks, "
        f"target {len(target)} elements)",
        "blocks:",
        *_legend(partition),
    ]


def cmd_regions(args, partition, target, label, warn):
    beta = _precision_arg(args.beta, "beta", warn)
    gamma = None if args.gamma is None else _precision_arg(args.gamma, "gamma", warn)
    approx = vprs(partition, target, beta) if gamma is None else vprsve(partition, target, beta, gamma)
    params = {"beta": frac(beta)}
    if gamma is not None:
        params["gamma"] = frac(gamma)
    result = {r: _region_json(approx, r) for r in REGIONS}
    result["accuracy"] = frac(approx.accuracy)

    lines = _header(partition, target, label)
    lines += [f"{k}: {v}" for k, v in params.items()]
    lines += [f"{r}: {_blockset(approx.blocks(r))}" for r in REGIONS]
    lines.append(f"accuracy: {frac(approx.accuracy)}")
    return params, result, None, lines, EXIT_OK


def cmd_thresholds(args, partition, target, label, warn):
    prof = thresholds(partition, target)
    result = {
        "degrees": {block_name(b): frac(d) for b, d in enumerate(prof.degrees)},
        "critical": [frac(c) for c in prof.critical],
    }
    lines = _header(partition, target, label) + ["degrees:"]
    lines += [f"  {block_name(b)}: {frac(d)}" for b, d in enumerate(prof.degrees)]
    crit = ", ".join(result["critical"]) or "(empty)"
    lines.append(f"critical: {crit}")
    return {}, result, None, lines, EXIT_OK


def cmd_sweep(args, partition, target, label, warn):
    rows = []
    lines = _header(partition, target, label)
    lines.append(f"{'beta':>6}  {'|lower|':>7}  {'|upper|':>7}  {'accuracy':>8}  BN")
    for beta, a in sweep(partition, target):
        bn = a.blocks("BN")
        rows.append({
            "beta": frac(beta),
            "lower_size": len(a.lower),
            "upper_size": len(a.upper),
            "accuracy": frac(a.accuracy),
            "BN": {"blocks": [b + 1 for b in bn], "elements": a.boundary.labels()},
        })
        lines.append(f"{frac(beta):>6}  {len(a.lower):>7}  {len(a.upper):>7}  "
                     f"{frac(a.accuracy):>8}  {_blockset(bn)}")
    return {}, {"rows": rows}, None, lines, EXIT_OK


def _law_lines(report) -> tuple[list[str], dict]:
    lines, checks = [], {}
    for name, r in report.laws.items():
        lines.append(f"  {name}: {'PASS' if r.holds else 'FAIL'}")
        if r.counterexample:
            ce = r.counterexample
            lines.append(f"    operands: {'; '.join(ce['operands'])}")
            lines.append(f"    lhs: {ce['lhs']}")
            lines.append(f"    rhs: {ce['rhs']}")
        checks[name] = {"status": "PASS" if r.holds else "FAIL", "counterexample": r.counterexample}
    return lines, checks


def cmd_lattice(args, partition, target, label, warn):
    grid = parse_grid(args.grid)
    fam = family(partition, target, grid)
    closed = closure(fam)
    pos = {e.key: i for i, e in enumerate(closed)}
    report = check_laws(closed)
    family_report = check_laws(fam)

    def blocks_of(s):
        return [b + 1 for b in partition.blocks_within(s)]

    elements = [
        {"index": i, "lower": blocks_of(e.lower), "upper": blocks_of(e.upper),
         "provenance": None if e.provenance is None else [frac(p) for p in e.provenance]}
        for i, e in enumerate(closed)
    ]
    jt, mt = cayley(closed, join), cayley(closed, meet)
    result = {
        "family": [{"beta": frac(b), "element": pos[e.key]} for b, e in zip(grid, fam)],
        "family_closed": family_report.closed,
        "closure_size": len(closed),
        "elements": elements,
        "join": jt,
        "meet": mt,
        "triples_checked": report.checked_triples,
    }
    law_lines, checks = _law_lines(report)
    ok = report.all_hold and report.closed

    lines = _header(partition, target, label)
    lines.append(f"grid: {', '.join(frac(b) for b in grid)}")
    lines.append(f"family: {len(fam)} elements")
    for b, e in zip(grid, fam):
        lines.append(f"  X({frac(b)}) = e{pos[e.key]}")
    lines.append(f"family closed under join/meet: {'yes' if family_report.closed else 'no'}")
    lines.append(f"closure: {len(closed)} elements")
    for el in elements:
        prov = "" if el["provenance"] is None else f"  [lower at {el['provenance'][0]}, upper at {el['provenance'][1]}]"
        lo = _blockset([b - 1 for b in el["lower"]])
        up = _blockset([b - 1 for b in el["upper"]])
        lines.append(f"  e{el['index']}: lower {lo}, upper {up}{prov}")
    for name, table in (("join", jt), ("meet", mt)):
        lines.append(f"{name} table:")
        width = len(str(len(closed)))
        lines.append("  " + " " * (width + 2) + " ".join(f"e{j:<{width}}" for j in range(len(closed))))
        for i, row in enumerate(table):
            cells = " ".join(("?" * (width + 1)) if c is None else f"e{c:<{width}}" for c in row)
            lines.append(f"  e{i:<{width}} {cells}")
    lines.append(f"laws ({report.element_count} elements, {report.checked_triples} triples):")
    lines += law_lines
    return {"grid": [frac(b) for b in grid]}, result, checks, lines, EXIT_OK if ok else EXIT_FAILED


def cmd_check(args, partition, target, label, warn):
    results = check_instance(partition, target)
    checks = {r.name: {"status": "PASS" if r.passed else "FAIL", "description": r.description,
                       "detail": r.detail or None} for r in results}
    lines = _header(partition, target, label)
    lines.append(f"critical: {', '.join(frac(c) for c in thresholds(partition, target).critical) or '(empty)'}")
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.description}")
        if r.detail:
            lines.append(f"      {r.detail}")
    ok = all(r.passed for r in results)
    return {}, {"passed": ok}, checks, lines, EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "regions": cmd_regions,
    "thresholds": cmd_thresholds,
    "sweep": cmd_sweep,
    "lattice": cmd_lattice,
    "check": cmd_check,
}


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def warn(msg):
        print(msg, file=stderr)

    try:
        partition, target, label = load(args)
        params, result, checks, lines, code = COMMANDS[args.command](args, partition, target, label, warn)
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INVALID
    except VprsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FAILED

    if args.format == "json":
        doc = {
            "command": args.command,
            "input": {"path": args.input or args.table, "kind": "instance" if args.input else "table",
                      "name": label},
            "parameters": params,
            "result": result,
        }
        if checks is not None:
            doc["checks"] = checks
        stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        stdout.write("\n".join(line.rstrip() for line in lines) + "\n")
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
