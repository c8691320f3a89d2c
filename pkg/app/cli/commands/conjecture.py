from __future__ import annotations

import argparse

from app.services.conjecture_lab import CONJECTURES, run_conjecture
from app.services.report_writer import dumps, emit
from app.utils.index_parser import parse_grid


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("conjecture", help="record observations for a conjecture over a grid")
    p.add_argument("id", choices=list(CONJECTURES))
    p.add_argument("--grid", default="", help="e.g. k=2..8,n=1..20")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json",), default="json", help="reports are always JSON")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    # observations never fail the process
    report = run_conjecture(args.id, parse_grid(args.grid), workers=args.workers)
    emit(dumps(report) + "\n", args.out)
    return 0
