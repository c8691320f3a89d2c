from __future__ import annotations

import argparse

from app.services.congruence_search import SERIES, series_curve
from app.services.report_writer import dumps_curve, emit, render, write_curve_csv
from app.utils.index_parser import parse_index


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("plotdata", help="curve data for Pi_{r,2}(x) and derived series")
    p.add_argument("--series", choices=SERIES, required=True)
    p.add_argument("--xmax", required=True, help="largest x (index literal)")
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    points = series_curve(args.series, parse_index(args.xmax), args.samples, workers=args.workers)
    text = dumps_curve(points) + "\n" if args.format == "json" else render(write_curve_csv, points)
    emit(text, args.out)
    return 0
