"""Command line: ``commonsearch {run,sweep,intersect,analyze}``.

Exit codes: 0 success, 2 parse error, 3 capacity, 4 no common entries,
5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import harness
from .classical import classical_common_entries
from .errors import CommonSearchError, InstanceParseError
from .instances import load_instance

EXIT_OK = 0
EXIT_PARSE = 2


def _parse_int_list(text: str) -> list[int]:
    """Parse ``"1,3,5-8"`` into ``[1, 3, 5, 6, 7, 8]``; empty text gives ``[]``."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def _flat_table(d: dict) -> str:
    buf = io.StringIO()
    flat = {k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in d.items()}
    writer = csv.DictWriter(buf, fieldnames=list(flat), lineterminator="\n")
    writer.writeheader()
    writer.writerow(flat)
    return buf.getvalue()


def cmd_run(args) -> int:
    instance = load_instance(args.instance)
    report = harness.run(instance, shots=args.shots, seed=args.seed,
                         amplifier=args.amplifier, iterations=args.iterations)
    d = report.to_dict()
    _emit(json.dumps(d, indent=2) if args.format == "doc" else _flat_table(d), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    n_values = _parse_int_list(args.n)
    m_values = None if args.mc == "all" else _parse_int_list(args.mc)
    amps = {a.strip() for a in args.amplifiers.split(",") if a.strip()}
    if not amps <= {"partial", "grover"}:
        raise ValueError(f"unknown amplifiers {sorted(amps - {'partial', 'grover'})}")
    grover = "grover" in amps
    report = harness.sweep(n_values, m_values, kappa=args.kappa, grover=grover,
                           seed=args.seed, workers=args.workers)
    _emit(report.to_json() if args.format == "doc" else report.to_csv(), args.out)
    return EXIT_OK


def cmd_intersect(args) -> int:
    instance = load_instance(args.instance)
    common, queries = classical_common_entries(instance)
    d = {"n": instance.n, "kappa": instance.kappa, "labels": instance.labels,
         "common_entries": sorted(common), "M_c": len(common), "queries": queries}
    _emit(json.dumps(d, indent=2) if args.format == "doc" else _flat_table(d), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    if args.instance is not None:
        instance = load_instance(args.instance)
        N, m_c, kappa = instance.N, int(instance.common_mask().sum()), instance.kappa
    else:
        if args.n is None or args.mc is None:
            raise InstanceParseError("analyze needs --instance or both --n and --mc")
        N, m_c, kappa = 1 << args.n, args.mc, args.kappa
    d = harness.analyze(N, m_c, kappa)
    _emit(json.dumps(d, indent=2) if args.format == "doc" else _flat_table(d), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commonsearch",
        description="Find entries common to several databases by partial-diffusion search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--format", choices=("doc", "table"), default="doc")

    p = sub.add_parser("run", help="simulate the search on an instance file")
    p.add_argument("--instance", required=True)
    p.add_argument("--shots", type=int, default=1024)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--amplifier", choices=("partial", "grover"), default="partial")
    p.add_argument("--iterations", type=int, default=None,
                   help="override the scheduled iteration count")
    common(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("sweep", help="compare closed form and simulation over (n, M_c)")
    p.add_argument("--n", required=True, help="data widths, e.g. '2-6' or '4'")
    p.add_argument("--mc", default="all", help="'all' or a list such as '1,2,13-16'")
    p.add_argument("--kappa", type=int, default=2)
    p.add_argument("--amplifiers", default="partial",
                   help="comma list from {partial, grover}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("intersect", help="classical occurrence-count baseline")
    p.add_argument("--instance", required=True)
    common(p)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("analyze", help="schedule and predictions only, no simulation")
    p.add_argument("--instance", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--mc", type=int, default=None)
    p.add_argument("--kappa", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CommonSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
