"""Command-line entry point: ``subcheck check | gen | bench``.

Exit codes: 0 substitutable, 1 not substitutable, 2 not coherent, 64 usage
error, 65 malformed list file, 66 I/O error, 70 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .bench import BenchDisagreement, loglog_slope, medians, run_bench, write_csv
from .checker import InvariantError, MODES, WITNESS
from .generators import KINDS, GenSpec
from .listfile import ListFileError, parse, serialize
from .oracle import UniverseTooLarge
from .report import ALGORITHMS, EXIT_CODES, format_report, report_dict, timed_check

EX_USAGE = 64
EX_DATAERR = 65
EX_NOINPUT = 66
EX_SOFTWARE = 70

POLARITY_NOTE = "sens-polarity: witness requires Y insensitive to x"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subcheck", description="Test substitutability of preference lists.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} ({POLARITY_NOTE})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="decide whether a list file is substitutable")
    p.add_argument("file", help="list file, or - for stdin")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="fast")
    p.add_argument("--mode", choices=MODES, default=WITNESS)
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.add_argument("--quiet", action="store_true", help="print nothing; exit code only")

    p = sub.add_parser("gen", help="write a generated list file")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("-m", type=int, required=True, help="universe size")
    p.add_argument("-q", type=int, help="capacity (responsive)")
    p.add_argument("-n", type=int, help="member count (random_coherent)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("bench", help="time fast vs naive on complete coherent lists")
    p.add_argument("-m", type=_int_list, required=True, metavar="SIZES", help="e.g. 8,9,10")
    p.add_argument("--algorithms", default="fast,naive")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="CSV output file (default stdout)")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fp:
        return fp.read()


def cmd_check(args) -> int:
    plist = parse(_read(args.file))
    if args.mode != WITNESS and args.algorithm != "fast":
        raise UsageError("--mode figure1 requires --algorithm fast")
    verdict, elapsed = timed_check(plist, args.algorithm, args.mode)
    if not args.quiet:
        if args.json:
            print(json.dumps(report_dict(plist, verdict, elapsed)))
        else:
            print(format_report(plist, verdict, elapsed))
    return EXIT_CODES[verdict.outcome]


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(args.kind, args.m, args.seed, args.q, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = serialize(spec.build(), comments=[f"subcheck gen {spec.describe()}"])
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    bad = [a for a in algorithms if a not in ("fast", "naive")]
    if bad or not algorithms:
        raise UsageError(f"bench algorithms must be fast and/or naive, got {args.algorithms!r}")
    if args.reps < 1 or any(not 1 <= m <= 20 for m in args.m):
        raise UsageError("need reps >= 1 and sizes in 1..20")
    rows = run_bench(args.m, algorithms, args.reps, args.seed)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fp:
            write_csv(rows, fp)
    else:
        write_csv(rows, sys.stdout)
    med = medians(rows)
    for (m, alg), t in sorted(med.items()):
        print(f"m={m:2d} N={1 << m:7d} {alg:5s} median {t / 1e6:10.3f} ms", file=sys.stderr)
    for alg in algorithms:
        pts = sorted((1 << m, t) for (m, a), t in med.items() if a == alg)
        if len(pts) >= 2:
            slope = loglog_slope([p[0] for p in pts], [p[1] for p in pts])
            print(f"{alg}: log-log slope vs N = {slope:.2f}", file=sys.stderr)
    return 0


COMMANDS = {"check": cmd_check, "gen": cmd_gen, "bench": cmd_bench}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, UniverseTooLarge) as exc:
        print(f"subcheck: {exc}", file=sys.stderr)
        return EX_USAGE
    except ListFileError as exc:
        print(f"subcheck: parse error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except OSError as exc:
        print(f"subcheck: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except (InvariantError, BenchDisagreement) as exc:
        print(f"subcheck: internal error: {exc}", file=sys.stderr)
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
