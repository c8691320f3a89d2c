from __future__ import annotations

import argparse

from app.services.identities import REGISTRY, run_sweep
from app.services.report_writer import dumps, emit
from app.utils.index_parser import parse_grid


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("verify", help="sweep an identity over a parameter range; exit 1 on any failure")
    p.add_argument("--identity", required=True, choices=sorted(REGISTRY))
    p.add_argument("--range", dest="grid", default="", help="e.g. a=1..8,m=1..64 (lemma1 also takes trials=N,seed=S)")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json",), default="json", help="reports are always JSON")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    report = run_sweep(args.identity, parse_grid(args.grid), workers=args.workers)
    emit(dumps(report) + "\n", args.out)
    return 0 if report.passed else 1
