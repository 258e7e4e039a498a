"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
failure. ``check-pair --verdict-exit`` instead exits with 10 + the verdict
class index (isomorphic, cospectral, ncsc, unrelated).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .core import circulant
from .cospectral import (
    RECORD_FIELDS,
    classify_pair,
    complement_shift_pair,
    consecutive_pair,
    distinct_inertia_pair,
    record_csv_row,
    record_json,
    same_inertia_pair,
    search_ncsc,
)
from .numeric import DEFAULT_PRECISION, PrecisionExhausted
from .spectra import inertia, power_sums, spectrum
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3
VERDICT_CLASSES = ("isomorphic", "cospectral", "ncsc", "unrelated")
FAMILY_NAMES = ("lemma21", "thm31", "thm32", "thm44")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def generator_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty generator list")
    bad = [v for v in values if v <= 0]
    if bad:
        raise argparse.ArgumentTypeError(f"generators must be positive residues, got {bad}")
    return values


def _emit(obj, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(obj, separators=(",", ":")) + "\n")
    else:
        for key, value in obj.items():
            out.write(f"{key:>28}: {value}\n")


def cmd_spectrum(args, out):
    g = circulant(args.n, args.gens)
    spec = spectrum(g, args.prec)
    sums = power_sums(g, args.max_power)
    inn = inertia(g)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["j", "eigenvalue"])
        for j, v in enumerate(spec.floats()):
            w.writerow([j, repr(v)])
        return EXIT_OK
    record = {
        "n": g.n,
        "set": list(g.elements),
        "eigenvalues": spec.floats(),
        "power_sums": sums.to_strings(),
        "inertia": list(inn),
    }
    if args.format == "json":
        _emit(record, "json", out)
    else:
        out.write(f"graph {g}  degree {g.degree}\n")
        for j, v in enumerate(spec.floats()):
            out.write(f"  lambda_{j:<4d} {v: .15f}\n")
        for t, p in enumerate(sums.sums, 1):
            out.write(f"  p_{t:<3d} {p}\n")
        out.write(f"  inertia {inn}\n")
    return EXIT_OK


def _pair_output(g1, g2, verdict):
    return {"n": g1.n, "set1": list(g1.elements), "set2": list(g2.elements), **verdict.to_dict()}


def _verdict_status(args, verdict):
    if getattr(args, "verdict_exit", False):
        return 10 + VERDICT_CLASSES.index(verdict.verdict_class)
    return EXIT_OK


def cmd_check_pair(args, out):
    g1, g2 = circulant(args.n, args.gens1), circulant(args.n, args.gens2)
    verdict = classify_pair(g1, g2)
    rec = _pair_output(g1, g2, verdict)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(list(rec))
        w.writerow([json.dumps(v) if isinstance(v, (list, bool)) or v is None else v for v in rec.values()])
    else:
        _emit(rec, args.format, out)
    return _verdict_status(args, verdict)


def cmd_family(args, out):
    name = args.name
    if name == "lemma21":
        if args.n is None or args.gens is None:
            raise UsageError("family lemma21 needs --n and --gens")
        pair = complement_shift_pair(args.n, args.gens)
    elif name == "thm31":
        if args.k is None:
            raise UsageError("family thm31 needs --k")
        pair = distinct_inertia_pair(args.k)
    elif name == "thm32":
        if args.alpha is None:
            raise UsageError("family thm32 needs --alpha")
        pair = same_inertia_pair(args.alpha)
    else:
        if args.k is None or args.s is None:
            raise UsageError("family thm44 needs --k and --s")
        pair = consecutive_pair(args.k, args.s)
    verdict = classify_pair(*pair)
    rec = {"family": name, **_pair_output(pair[0], pair[1], verdict)}
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(list(rec))
        w.writerow([json.dumps(v) if isinstance(v, (list, bool)) or v is None else v for v in rec.values()])
    else:
        _emit(rec, args.format, out)
    return EXIT_OK


def cmd_search(args, out):
    sink = open(args.output, "w", newline="") if args.output else out
    try:
        if args.format == "csv":
            writer = csv.writer(sink, lineterminator="\n")
            writer.writerow(RECORD_FIELDS)
            emit = lambda rec: writer.writerow(record_csv_row(rec))
        else:
            emit = lambda rec: sink.write(record_json(rec) + "\n")
        result = search_ncsc(args.n, args.max_s, emit=emit, max_pairs=args.max_pairs,
                             workers=args.workers)
        summary = result.summary()
        if args.format == "csv":
            sink.write("# " + record_json(summary) + "\n")
        else:
            sink.write(record_json(summary) + "\n")
    finally:
        if args.output:
            sink.close()
    return EXIT_OK


def cmd_verify(args, out):
    checks = run_suite(args.suite, max_k=args.max_k, max_p=args.max_p, max_alpha=args.max_alpha,
                       max_s=args.max_s)
    passed = all(c.passed for c in checks)
    report = {"suite": args.suite, "passed": passed, "checks": [c.to_dict() for c in checks]}
    if args.format == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        for c in checks:
            out.write(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.cases} cases)\n")
    return EXIT_OK if passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="circspec", description="Spectra and cospectrality of circulant graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, choices=("json", "csv", "table"), default="table"):
        sp.add_argument("--format", choices=choices, default=default)

    sp = sub.add_parser("spectrum", help="eigenvalues, power sums p_1..p_8 and inertia")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--gens", type=generator_list, required=True, help="generator half-set, e.g. 1,2")
    sp.add_argument("--prec", type=int, default=DEFAULT_PRECISION)
    sp.add_argument("--max-power", type=int, default=8)
    fmt(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("check-pair", help="classify two circulants of the same order")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--gens1", type=generator_list, required=True)
    sp.add_argument("--gens2", type=generator_list, required=True)
    sp.add_argument("--verdict-exit", action="store_true",
                    help="exit with 10 + class index (isomorphic, cospectral, ncsc, unrelated)")
    fmt(sp)
    sp.set_defaults(func=cmd_check_pair)

    sp = sub.add_parser("family", help="build and classify a pair from one of the families")
    sp.add_argument("name", choices=FAMILY_NAMES)
    sp.add_argument("--n", type=int)
    sp.add_argument("--gens", type=generator_list)
    sp.add_argument("--k", type=int)
    sp.add_argument("--s", type=int)
    sp.add_argument("--alpha", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("search", help="exhaustive NCSC search, NDJSON output")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-s", type=int, required=True)
    sp.add_argument("--output", help="write records here instead of stdout")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--max-pairs", type=int, default=2_000_000)
    fmt(sp, ("json", "csv"), "json")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--max-k", type=int)
    sp.add_argument("--max-p", type=int, default=13)
    sp.add_argument("--max-alpha", type=int, default=8)
    sp.add_argument("--max-s", type=int, default=30)
    fmt(sp, ("json", "table"), "json")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "workers", 1) < 1:
        parser.print_usage(sys.stderr)
        sys.stderr.write("circspec: error: --workers must be >= 1\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"circspec: error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, PrecisionExhausted) as exc:
        sys.stderr.write(f"circspec: domain error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
