"""Command-line entry point.

Exit codes: 0 success, 1 invalid input, 2 resource guard refusal,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import atoms, cdf, classifier, cover_measure, sampler
from .digit_system import validate
from .exceptions import (
    InapplicableError,
    InvariantViolation,
    ModelError,
    ResourceGuardError,
    UnsupportedOperationError,
)
from .modelio import load_model
from .rational import decimal_str
from .selftest import run_selftest

EXIT_OK, EXIT_INVALID, EXIT_GUARD, EXIT_INVARIANT = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse's default exit code 2 would collide with the guard code
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _seed(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _alpha(text):
    v = float(text)
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError("alpha must be in (0, 1)")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--model", required=True, metavar="PATH")
    common.add_argument("--out", metavar="DIR")
    common.add_argument("--max-entries", type=_positive, default=atoms.DEFAULT_MAX_ENTRIES)

    parser = _Parser(prog="subsums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("validate", parents=[common])
    sub.add_parser("classify", parents=[common])
    p = sub.add_parser("atoms", parents=[common])
    p.add_argument("--level", type=_nonneg, required=True)
    p = sub.add_parser("measure", parents=[common])
    p.add_argument("--max-level", type=_nonneg, required=True)
    p.add_argument("--dump-intervals", action="store_true",
                   help="also write the max-level intervals to DIR/cover_intervals.csv")
    p = sub.add_parser("cdf", parents=[common])
    p.add_argument("--level", type=_nonneg, required=True)
    p.add_argument("--grid", type=_positive, default=101)
    p = sub.add_parser("sample", parents=[common])
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--depth", type=_positive, default=sampler.DEFAULT_DEPTH)
    p.add_argument("--check-level", type=_nonneg)
    p.add_argument("--grid", type=_positive, default=101)
    p.add_argument("--alpha", type=_alpha, default=0.01)
    p = sub.add_parser("selftest")
    p.add_argument("--out", metavar="DIR")
    return parser


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _emit(args, name, text, stream=None):
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / name, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        (stream or sys.stdout).write(text)


def _cmd_validate(args):
    model = load_model(args.model, check=False)
    report = validate(model)
    _emit(args, "validate.json", _json(report.as_dict()))
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_classify(args):
    result = classifier.classify(load_model(args.model))
    _emit(args, "classify.json", _json(result.as_dict()))
    return EXIT_OK


def _cmd_atoms(args):
    model = load_model(args.model)
    table = atoms.table_at(model, args.level, args.max_entries)
    rows = (
        (r, m.numerator, m.denominator, decimal_str(table.point(r)))
        for r, m in table.masses.items()
    )
    _emit(args, "atoms.csv", _csv(("r", "mass_num", "mass_den", "value"), rows))
    return EXIT_OK


def _cmd_measure(args):
    if args.dump_intervals and not args.out:
        raise _UsageError("--dump-intervals requires --out")
    model = load_model(args.model)
    seq = cover_measure.cover_sequence(model, args.max_level, args.max_entries)
    rows = (
        (n, count, length.numerator, length.denominator, decimal_str(length))
        for n, count, length in seq
    )
    header = ("n", "intervals", "total_length_num", "total_length_den", "total_length_decimal")
    _emit(args, "measure.csv", _csv(header, rows))
    if args.dump_intervals:
        c = cover_measure.cover(model, args.max_level, args.max_entries)
        rows = (
            (lo.numerator, lo.denominator, hi.numerator, hi.denominator)
            for lo, hi in c.shifted_intervals()
        )
        _emit(args, "cover_intervals.csv", _csv(("lo_num", "lo_den", "hi_num", "hi_den"), rows))
    return EXIT_OK


def _cmd_cdf(args):
    model = load_model(args.model)
    grid = cdf.support_grid(model, args.grid)
    curve = cdf.cdf_curve(model, grid, args.level, args.max_entries)
    rows = (
        (b.x.numerator, b.x.denominator, b.lo.numerator, b.lo.denominator,
         b.hi.numerator, b.hi.denominator, decimal_str(b.lo), decimal_str(b.hi))
        for b in curve
    )
    header = ("x_num", "x_den", "lo_num", "lo_den", "hi_num", "hi_den", "lo_decimal", "hi_decimal")
    _emit(args, "cdf.csv", _csv(header, rows))
    return EXIT_OK


def _cmd_sample(args):
    model = load_model(args.model)
    if args.check_level is not None:
        atoms.check_guard(model.s, args.check_level, args.max_entries)
    batch = sampler.sample(model, args.count, args.seed, args.depth)
    den = batch.denominator
    rows = ((i, decimal_str(Fraction(v, den))) for i, v in enumerate(batch.numerators))
    _emit(args, "samples.csv", _csv(("index", "value_decimal"), rows))
    if args.check_level is not None:
        report = sampler.band_check(batch, model, args.check_level, args.grid, args.alpha,
                                    args.max_entries)
        doc = report.as_dict()
        doc["truncation_bias"] = decimal_str(batch.bias)
        _emit(args, "band_report.json", _json(doc), stream=sys.stderr)
        if not report.passed:
            return EXIT_INVARIANT
    return EXIT_OK


def _cmd_selftest(args):
    lines = []
    try:
        run_selftest(out=lines.append)
    finally:
        _emit(args, "selftest.txt", "\n".join(lines) + "\n")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "classify": _cmd_classify,
    "atoms": _cmd_atoms,
    "measure": _cmd_measure,
    "cdf": _cmd_cdf,
    "sample": _cmd_sample,
    "selftest": _cmd_selftest,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except (ModelError, UnsupportedOperationError, InapplicableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
