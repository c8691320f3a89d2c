from __future__ import annotations

import json
import logging
from functools import lru_cache
from typing import Any, Dict, List, Optional

from app.core.config import settings
from app.core.errors import PreconditionViolated
from app.models.congruence import CongruenceSpec
from app.models.family import ALL_ONES, TWOS
from app.models.polynomial import IntPolynomial
from app.models.report import TableRow
from app.services.congruence_search import counts_at, enumerate_solutions, is_solution
from app.services.stern_engine import binary_digits, stern_poly

logger = logging.getLogger(__name__)

SOLUTION_TABLES = {2: 0, 3: 1, 4: 2}
TABLE_MODULUS = 3
TABLE1_KMIN = 15


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Dict[str, Any]:
    path = settings.FIXTURES_DIR / f"{name}.json"
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def format_binary(n: int, spaced: bool = True) -> str:
    """MSB-first expansion as "(1 0 0 1 1)_{2}", or "(10011)_{2}" unspaced."""
    digits = [str(d) for d in binary_digits(n)]
    return "(" + (" " if spaced else "").join(digits) + ")_{2}"


def big_h_values() -> List[int]:
    return [int(v) for v in load_fixture("big_h")["values"]]


def table1_rows(k_max: int = 20, k_min: int = TABLE1_KMIN, workers: Optional[int] = None) -> List[TableRow]:
    """Pi_{0,2}(2^k) and Pi_{1,2}(2^k) for k_min..k_max from one sweep per congruence."""
    if k_min < 1 or k_max < k_min:
        raise PreconditionViolated(f"need 1 <= kmin <= kmax, got {k_min}..{k_max}")
    fixture = load_fixture("table1")
    expected = {k: (a, b) for k, a, b in zip(fixture["k"], fixture["pi02"], fixture["pi12"])}
    points = [2**k for k in range(k_min, k_max + 1)]
    zero = counts_at(enumerate_solutions(points[-1], CongruenceSpec(0, 2), workers=workers).solutions, points)
    one = counts_at(enumerate_solutions(points[-1], CongruenceSpec(1, 2), workers=workers).solutions, points)
    rows = []
    for k, (_, c02), (_, c12) in zip(range(k_min, k_max + 1), zero, one):
        want = expected.get(k)
        rows.append(
            TableRow(
                cells={"k": k, "pi02": c02, "pi12": c12},
                expected=None if want is None else {"pi02": want[0], "pi12": want[1]},
                matches=None if want is None else (c02, c12) == want,
            )
        )
    return rows


def table_solutions_rows(which: int, bound: int = 2**20, workers: Optional[int] = None) -> List[TableRow]:
    """Solutions of (r,3) up to bound with the trivial families removed, against the printed entries."""
    if which not in SOLUTION_TABLES:
        raise PreconditionViolated(f"solution tables are 2, 3 and 4, got {which}")
    fixture = load_fixture(f"table{which}")
    printed = {e["n"]: e["binary"] for e in fixture["entries"]}
    spec = CongruenceSpec(SOLUTION_TABLES[which], TABLE_MODULUS)
    report = enumerate_solutions(bound, spec, exclusions=(ALL_ONES, TWOS), workers=workers)
    rows = []
    for n in report.solutions:
        binary = format_binary(n)
        want = printed.get(n)
        rows.append(TableRow(cells={"n": n, "binary": binary}, expected=want, matches=None if want is None else want == binary))
    found = set(report.solutions)
    for n in sorted(printed):
        if n <= bound and n not in found:
            logger.warning("table %d entry %d not found up to %d", which, n, bound)
            rows.append(TableRow(cells={"n": n, "binary": None}, expected=printed[n], matches=False))
    rows.sort(key=lambda row: row.cells["n"])
    return rows


def _congruence_holds(n: int, r: int, m: Optional[int], moduli: List[int]) -> bool:
    if m is not None:
        return is_solution(n, CongruenceSpec(r, m))
    return all(is_solution(n, CongruenceSpec(r, mm)) for mm in moduli if mm > r)


def table5_rows() -> List[TableRow]:
    """Polynomial match and congruence check reported separately per printed row."""
    fixture = load_fixture("table5")
    moduli = fixture["moduli"]
    rows = []
    for entry in fixture["entries"]:
        n, r, m = entry["n"], entry["r"], entry["m"]
        b = stern_poly(n)
        printed = IntPolynomial(entry["coefficients"])
        holds = _congruence_holds(n, r, m, moduli)
        if not holds:
            logger.warning("printed label (%d,%s) does not hold for n=%d", r, m if m is not None else "m", n)
        rows.append(
            TableRow(
                cells={
                    "r": r,
                    "m": m,
                    "n": n,
                    "binary": format_binary(n, spaced=False),
                    "polynomial": b.pretty(),
                    "congruence_holds": holds,
                },
                expected=entry["printed"],
                matches=b == printed and format_binary(n, spaced=False) == entry["binary"],
            )
        )
    return rows
