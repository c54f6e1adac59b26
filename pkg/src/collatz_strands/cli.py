"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 budget exhausted
(or search interrupted), 4 invariant violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import re
import sys

from . import cadogan, core, diagram, search, trajectory, verify
from .errors import BoundsMismatch, BudgetExhausted, CollatzError, CycleFound

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET, EXIT_VIOLATION = 0, 1, 2, 3, 4
WORKERS_ENV = "COLLATZ_STRANDS_WORKERS"
ELIDE_DIGITS = 40

_NATURAL = re.compile(r"(?:[0-9]+|0[xX][0-9a-fA-F]+)\Z")


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_natural(s: str) -> int:
    s = s.strip()
    if not _NATURAL.match(s):
        raise DomainError(f"not a natural number: {s!r}")
    return int(s, 0) if s[:2].lower() == "0x" else int(s)


def fmt_int(n: int, fmt: str = "text") -> str:
    """Decimal text; in text format very long values are elided with a digit count."""
    s = str(n)
    if fmt == "text" and len(s) > ELIDE_DIGITS:
        return f"{s[:12]}...{s[-12:]} ({len(s)} digits)"
    return s


def fmt_frac(x, fmt="text") -> str:
    if x.denominator == 1:
        return fmt_int(x.numerator, fmt)
    return f"{fmt_int(x.numerator, fmt)}/{fmt_int(x.denominator, fmt)}"


def _frac_json(x):
    return {"numerator": x.numerator, "denominator": x.denominator}


def _emit_json(doc, out):
    out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


# -- commands ------------------------------------------------------------------

def cmd_trace(args, out):
    n = parse_natural(args.n)
    try:
        tr = core.trace_to_one(n, args.max_steps)
        converged = True
    except BudgetExhausted as e:
        tr = e.partial
        converged = False
    if args.format == "json":
        _emit_json({
            "n": n,
            "steps": [{"value": s.value, "k": s.k} for s in tr.steps],
            "m": tr.m,
            "converged": converged,
        }, out)
    else:
        for s in tr.steps:
            out.write(f"({fmt_int(s.value)}, k={s.k})\n")
        out.write(f"m={tr.m}\n" if converged else f"m>{tr.m} (budget exhausted)\n")
    return EXIT_OK if converged else EXIT_BUDGET


def cmd_coords(args, out):
    n = parse_natural(args.n)
    coord = cadogan.c(n)
    if args.format == "json":
        _emit_json({"n": n, "i": coord.i, "j": coord.j}, out)
    else:
        out.write(f"({coord.i}, {fmt_int(coord.j)})\n")
    return EXIT_OK


def cmd_table(args, out):
    rows = cadogan.table(args.rows, args.cols)
    if args.format == "json":
        _emit_json({"rows": args.rows, "cols": args.cols, "table": rows}, out)
    elif args.format == "csv":
        out.write("\n".join(",".join(map(str, r)) for r in rows) + "\n")
    else:
        width = len(str(rows[-1][-1]))
        for r in rows:
            out.write(" ".join(f"{v:>{width}}" for v in r) + "\n")
    return EXIT_OK


def _parse_coord(s):
    m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", s)
    if not m:
        raise DomainError(f"expected i,j, got {s!r}")
    return cadogan.Coord(int(m.group(1)), int(m.group(2)))


def cmd_diagram(args, out):
    start = _parse_coord(args.trajectory) if args.trajectory else None
    if start is not None and start.i < 1:
        raise DomainError("trajectory row must be >= 1")
    if args.format == "svg":
        out.write(diagram.render_svg(args.rows, args.cols, start))
    else:
        out.write(diagram.render_ascii(args.rows, args.cols, start))
    return EXIT_OK


def cmd_reduce(args, out):
    n = parse_natural(args.n)
    code = EXIT_OK
    try:
        seq = trajectory.reduce_sequence(n, args.rounds)
        halt = "zero"
    except BudgetExhausted as e:
        seq, halt, code = e.partial, "budget", EXIT_BUDGET
    except CycleFound as e:
        seq, halt = e.partial, "cycle"
    if args.format == "json":
        _emit_json({"n0": n, "sequence": seq, "halt": halt}, out)
    else:
        for r, J in enumerate(seq):
            out.write(f"J_{r}={fmt_int(J)}\n")
        out.write(f"halt: {halt}\n")
    return code


_SYMBOL = {
    trajectory.Classification.LESSER: "<",
    trajectory.Classification.ON: "=",
    trajectory.Classification.GREATER: ">",
}


def _parse_range(s):
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", s)
    if not m:
        raise DomainError(f"expected A..B, got {s!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a < 1 or b < a:
        raise DomainError(f"range must satisfy 1 <= A <= B, got {s}")
    return range(a, b + 1)


def cmd_classify(args, out):
    if (args.J is None) == (args.range is None):
        raise DomainError("give exactly one of J or --range")
    single = args.J is not None
    Js = [parse_natural(args.J)] if single else _parse_range(args.range)
    if single and Js[0] < 1:
        raise DomainError("J must be >= 1")
    fmt = args.format
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["J", "i", "j", "D", "class"])
    records = []
    for J in Js:
        cls, start, d = trajectory.classify_detail(J)
        if fmt == "csv":
            w.writerow([J, start.i, start.j, fmt_frac(d, "csv"), cls.value])
        elif fmt == "json":
            records.append({"J": J, "i": start.i, "j": start.j, "D": _frac_json(d), "class": cls.value})
        else:
            line = f"{cls.value}: j={fmt_int(start.j)} {_SYMBOL[cls]} D={fmt_frac(d)}"
            out.write(line + "\n" if single else f"J={fmt_int(J)} {line}\n")
    if fmt == "json":
        _emit_json(records[0] if single else records, out)
    return EXIT_OK


def _default_workers():
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_search(args, out):
    if args.kind == "appendix":
        bounds = {"a_max": args.a_max, "b_max": args.b_max}
    else:
        bounds = {"i_max": args.i_max, "k_max": args.k_max}
    if any(v is None for v in bounds.values()):
        raise DomainError(f"{args.kind} search needs {' and '.join('--' + k.replace('_', '-') for k in bounds)}")
    if any(v < 1 for v in bounds.values()):
        raise DomainError("bounds must be >= 1")
    workers = args.workers if args.workers is not None else _default_workers()
    kw = {"workers": workers, "stop_after": args.stop_after}
    try:
        if args.resume:
            doc = search.load_checkpoint(args.resume)
            if doc["kind"] != args.kind:
                raise BoundsMismatch(f"checkpoint is a {doc['kind']} search")
            report = search.resume(args.resume, bounds, checkpoint=args.checkpoint or args.resume, **kw)
        else:
            report = search.run_search(args.kind, bounds, checkpoint=args.checkpoint, **kw)
    except KeyboardInterrupt:
        sys.stderr.write("interrupted; resume from the checkpoint file\n")
        return EXIT_BUDGET
    out.write(report.to_json(timing=not args.no_timing))
    return EXIT_OK if report.complete else EXIT_BUDGET


def cmd_verify(args, out):
    try:
        results = verify.run_suites(args.suite, args.bound)
    except KeyError:
        raise DomainError(f"unknown suite {args.suite!r}; known: all, {', '.join(verify.SUITES)}")
    if args.format == "json":
        _emit_json([r.__dict__ for r in results], out)
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            extra = "" if r.passed else f" counterexample={r.counterexample}"
            out.write(f"{status} [{r.suite}] {r.name} ({r.checked} checked){extra}\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="collatz-strands", description="Collatz row-reduction and cycle-search toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("trace", help="apply gamma until 1 (formats: text, json)")
    s.add_argument("n")
    s.add_argument("--max-steps", type=int, default=core.DEFAULT_MAX_STEPS)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("coords", help="row and column of an odd number (formats: text, json)")
    s.add_argument("n")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_coords)

    s = sub.add_parser("table", help="coordinate table (formats: text, csv, json)")
    s.add_argument("--rows", type=int, default=5)
    s.add_argument("--cols", type=int, default=6)
    s.add_argument("--format", choices=["text", "csv", "json"], default="text")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("diagram", help="dot diagram with a boundary overlay (formats: ascii, svg)")
    s.add_argument("--rows", type=int, default=9)
    s.add_argument("--cols", type=int, default=43)
    s.add_argument("--trajectory", metavar="I,J")
    s.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    s.set_defaults(func=cmd_diagram)

    s = sub.add_parser("reduce", help="repeated row reductions from an odd n0 (formats: text, json)")
    s.add_argument("n")
    s.add_argument("--rounds", type=int, default=trajectory.DEFAULT_MAX_ROUNDS)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("classify", help="restart point vs boundary (formats: text, csv, json)")
    s.add_argument("J", nargs="?")
    s.add_argument("--range", metavar="A..B")
    s.add_argument("--format", choices=["text", "csv", "json"], default="text")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("search", help="Diophantine cycle searches (format: json)")
    s.add_argument("kind", choices=["appendix", "unified"])
    s.add_argument("--a-max", type=int)
    s.add_argument("--b-max", type=int)
    s.add_argument("--i-max", type=int)
    s.add_argument("--k-max", type=int)
    s.add_argument("--checkpoint", help="write progress to this JSON file")
    s.add_argument("--resume", help="continue from this checkpoint file")
    s.add_argument("--workers", type=int, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    s.add_argument("--stop-after", type=int, help="stop after about this many cells (leaves a checkpoint)")
    s.add_argument("--no-timing", action="store_true", help="omit elapsed time for byte-stable output")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", help="run invariant suites (formats: text, json)")
    s.add_argument("--suite", default="all")
    s.add_argument("--bound", type=int, default=1000)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DomainError, CollatzError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_DOMAIN


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout; handy for tests."""
    buf = io.StringIO()
    try:
        code = main(argv, buf)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else EXIT_USAGE
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
