from __future__ import annotations

import argparse

from app.core.errors import PreconditionViolated
from app.models.congruence import CongruenceSpec
from app.services.congruence_search import enumerate_solutions
from app.services.mining import mine_affine_families
from app.services.report_writer import dumps, emit, read_solutions_csv
from app.utils.index_parser import parse_index


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("mine", help="fit p*4^n + q*2^n + u through quadruples of known solutions")
    p.add_argument("--input", default=None, help="solutions CSV written by `search`")
    p.add_argument("--max", dest="bound", default=None, help="search up to this bound instead of reading a file")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--depth", type=int, default=4, help="terms validated beyond the fitted quadruple")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json",), default="json", help="reports are always JSON")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    spec = CongruenceSpec(args.r, args.m)
    if args.input is not None:
        solutions = read_solutions_csv(args.input)
    elif args.bound is not None:
        solutions = enumerate_solutions(parse_index(args.bound), spec, workers=args.workers).solutions
    else:
        raise PreconditionViolated("mine needs --input or --max")
    report = mine_affine_families(solutions, validation_depth=args.depth, spec=spec)
    emit(dumps(report) + "\n", args.out)
    return 0
