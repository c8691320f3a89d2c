from __future__ import annotations

import argparse

from app.models.congruence import CongruenceSpec
from app.models.family import FamilyId
from app.services.congruence_search import enumerate_solutions
from app.services.report_writer import dumps, emit, render, write_solutions_csv
from app.utils.index_parser import parse_index


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("search", help="odd solutions of B_n = 1 + r(t + ... + t^e(n)) mod m up to a bound")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max", dest="bound", required=True, help="search bound x (index literal, e.g. 2^20)")
    p.add_argument("--count", action="store_true", help="print Pi_{r,m}(x) only")
    p.add_argument("--exclude", default="", help="comma separated families, e.g. trivial-all-ones,trivial-twos")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--split-depth", type=int, default=None)
    p.add_argument("--cap", type=int, default=None, help="override STERN_CAP")
    p.add_argument("--checkpoint", default=None, help="write resumable state here")
    p.add_argument("--resume", default=None, help="resume from a checkpoint file")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    exclusions = [FamilyId.parse(x) for x in args.exclude.split(",") if x.strip()]
    report = enumerate_solutions(
        parse_index(args.bound),
        CongruenceSpec(args.r, args.m),
        exclusions=exclusions,
        workers=args.workers,
        split_depth=args.split_depth,
        cap=args.cap,
        checkpoint_path=args.checkpoint,
        resume_path=args.resume,
    )
    if args.count:
        print(report.count)
        return 0
    text = dumps(report) + "\n" if args.format == "json" else render(write_solutions_csv, report)
    emit(text, args.out)
    if args.out is not None:
        print(report.count)
    return 0
