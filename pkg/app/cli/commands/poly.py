from __future__ import annotations

import argparse
import json

from app.models.polynomial import evaluate, reduce_mod
from app.services.stern_engine import stern_degree, stern_poly
from app.utils.index_parser import parse_index


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("poly", help="print B_n(t) as ascending coefficients")
    p.add_argument("index", help="decimal, 2^a+-b, or a family reference such as p[3,2] or H[1]")
    p.add_argument("--mod", type=int, default=None, help="reduce the coefficients modulo m")
    p.add_argument("--eval", dest="at", type=int, default=None, help="evaluate at an integer")
    p.add_argument("--degree", action="store_true", help="print e(n) only")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    n = parse_index(args.index)
    b = stern_poly(n)
    if args.degree:
        value = stern_degree(n)
        result = {"n": n, "degree": value}
        text = str(value)
    elif args.at is not None:
        value = evaluate(b, args.at)
        result = {"n": n, "at": args.at, "value": str(value)}
        text = str(value)
    elif args.mod is not None:
        residues = reduce_mod(b, args.mod, max(b.degree, 0)).coefficients
        result = {"n": n, "m": args.mod, "residues": list(residues)}
        text = ",".join(str(c) for c in residues)
    else:
        result = {"n": n, "coefficients": b.to_json(), "pretty": b.pretty()}
        text = b.to_text()
    print(json.dumps(result, sort_keys=True) if args.format == "json" else text)
    return 0
