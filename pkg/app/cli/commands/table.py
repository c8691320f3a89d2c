from __future__ import annotations

import argparse
import logging

from app.services.golden import table1_rows, table5_rows, table_solutions_rows
from app.services.report_writer import dumps, emit, render, write_table_csv
from app.utils.index_parser import parse_index

logger = logging.getLogger(__name__)


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("table", help="reproduce a results table against the embedded expected values")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4, 5))
    p.add_argument("--kmin", type=int, default=15, help="table 1: first k")
    p.add_argument("--kmax", type=int, default=20, help="table 1: last k")
    p.add_argument("--max", dest="bound", default="2^20", help="tables 2-4: search bound")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.which == 1:
        rows = table1_rows(k_max=args.kmax, k_min=args.kmin, workers=args.workers)
    elif args.which == 5:
        rows = table5_rows()
    else:
        rows = table_solutions_rows(args.which, parse_index(args.bound), workers=args.workers)
    mismatched = [r for r in rows if r.matches is False]
    if mismatched:
        logger.warning("table %d: %d row(s) differ from the printed values", args.which, len(mismatched))
    text = dumps(rows) + "\n" if args.format == "json" else render(write_table_csv, rows)
    emit(text, args.out)
    return 0
