"""Printed formulas that disagree with exact computation.

Each entry carries the printed reading, the computed value and the evidence;
nothing here is silently corrected.
"""

from __future__ import annotations

import logging
from typing import Callable, List

from app.core.errors import NotDivisible
from app.models.congruence import CongruenceSpec
from app.models.polynomial import IntPolynomial, add, reduce_mod
from app.models.report import TypoEntry
from app.services.congruence_search import is_solution
from app.services.families import h_index, jacobsthal, p_index, s_index
from app.services.golden import load_fixture
from app.services.stern_engine import stern_poly

logger = logging.getLogger(__name__)

RECURRENCE_CHECK_LIMIT = 64
V3_CHECK_LIMIT = 20
S0_CHECK_LIMIT = 20

PRINTED_W = {
    1: IntPolynomial((1, 1, 3)),
    2: IntPolynomial((1, 7, 7, 17, 7)),
}


def _printed_recurrence_table(limit: int) -> List[IntPolynomial]:
    """B_0..B_limit with the odd step read as B_{2n+1} = B_n + B_{n-1}."""
    table = [IntPolynomial(), IntPolynomial((1,))]
    for k in range(2, limit + 1):
        half = k // 2
        if k % 2 == 0:
            table.append(table[half].shift())
        else:
            table.append(add(table[half], table[half - 1]))
    return table


def abstract_recurrence() -> TypoEntry:
    printed = _printed_recurrence_table(RECURRENCE_CHECK_LIMIT)
    bad_at_two = [n for n in range(RECURRENCE_CHECK_LIMIT + 1) if printed[n](2) != n]
    disagree = [n for n in range(RECURRENCE_CHECK_LIMIT + 1) if printed[n] != stern_poly(n)]
    return TypoEntry(
        name="abstract-recurrence",
        location="summary statement of the defining recurrence",
        printed="B_{2n+1} = B_n + B_{n-1}",
        computed="B_{2n+1} = B_n + B_{n+1}",
        confirmed=bool(bad_at_two) and bool(disagree),
        evidence={
            "first_disagreement": disagree[0] if disagree else None,
            "printed_B3": printed[3].to_json(),
            "computed_B3": stern_poly(3).to_json(),
            "indices_breaking_B_n(2)=n": bad_at_two[:10],
        },
    )


def w_initials() -> TypoEntry:
    mismatches = {}
    for i, printed in PRINTED_W.items():
        computed = stern_poly(h_index(i))
        if printed != computed:
            mismatches[f"W_{i}"] = {
                "printed": printed.pretty(),
                "computed": computed.pretty(),
                "printed_at_2": printed(2),
                "h_index": h_index(i),
            }
    return TypoEntry(
        name="w-initials",
        location="initial values of the W_n recurrence",
        printed="W_1 = 3t^2+t+1, W_2 = 7t^4+17t^3+7t^2+7t+1",
        computed=f"W_1 = {stern_poly(h_index(1)).pretty()}, W_2 = {stern_poly(h_index(2)).pretty()}",
        confirmed=len(mismatches) == len(PRINTED_W),
        evidence=mismatches,
    )


def v3_index_collision() -> TypoEntry:
    from app.services.identities import v3_explicit

    failing = [n for n in range(2, V3_CHECK_LIMIT + 1) if v3_explicit(n) != stern_poly(p_index(3, n))]
    return TypoEntry(
        name="v3-index-collision",
        location="expanded form of V_{3,n}",
        printed="2t^n sum_{n=2}^{n-1} (3n-3i-2) t^i",
        computed="2t^n sum_{i=2}^{n-1} (3n-3i-2) t^i",
        confirmed=not failing,
        evidence={"checked_n": f"2..{V3_CHECK_LIMIT}", "failing_n": failing},
    )


def s0_expansion() -> TypoEntry:
    from app.services.identities import s0_explicit

    def failing(printed: bool) -> List[int]:
        return [n for n in range(2, S0_CHECK_LIMIT + 1) if s0_explicit(n, printed=printed) != stern_poly(s_index(0, n))]

    printed_failing, corrected_failing = failing(True), failing(False)
    return TypoEntry(
        name="s0-explicit",
        location="expanded form of B_{s_{0,n}}",
        printed="1 + 5t + sum_{i=2}^{n-1} (4i-3) t^i + ...",
        computed="1 + 5t + sum_{i=2}^{n-1} (4i+3) t^i + ...",
        confirmed=bool(printed_failing) and not corrected_failing,
        evidence={
            "checked_n": f"2..{S0_CHECK_LIMIT}",
            "printed_failing_n": printed_failing,
            "corrected_failing_n": corrected_failing,
            "printed_at_n3": s0_explicit(3, printed=True).to_json(),
            "computed_at_n3": stern_poly(s_index(0, 3)).to_json(),
        },
    )


def quadratic_form() -> TypoEntry:
    from app.services.identities import displayed_quadratic_form, quadratic_form_f

    failing = []
    for n in range(0, 6):
        x = stern_poly(jacobsthal(2 * n))
        y = stern_poly(jacobsthal(2 * n + 2))
        w = stern_poly(h_index(n))
        if displayed_quadratic_form(x, y) != w and quadratic_form_f(x, y) == w:
            failing.append(n)
    x1, y1 = stern_poly(jacobsthal(2)), stern_poly(jacobsthal(4))
    return TypoEntry(
        name="quadratic-form",
        location="quadratic form F(X, Y) with Y = B_{alpha_{2(n+1)}}",
        printed="F(X,Y) = (t^2+t+1)X^2 - (t+1)XY + Y^2",
        computed="F(X,Y) = t^2 X^2 - t XY + Y^2",
        confirmed=bool(failing),
        evidence={
            "failing_n": failing,
            "printed_at_n1": displayed_quadratic_form(x1, y1).pretty(),
            "B_19": stern_poly(19).pretty(),
        },
    )


def table5_label() -> TypoEntry:
    row = next(e for e in load_fixture("table5")["entries"] if e["n"] == 205)
    n, r, m = row["n"], row["r"], row["m"]
    b = stern_poly(n)
    residues = reduce_mod(b, m, b.degree).coefficients
    return TypoEntry(
        name="table5-205-label",
        location="factor table row n = 205",
        printed=f"({r},{m})",
        computed=f"residues mod {m}: {list(residues)}",
        confirmed=b == IntPolynomial(row["coefficients"]) and not is_solution(n, CongruenceSpec(r, m)),
        evidence={"polynomial_matches": b == IntPolynomial(row["coefficients"]), "residues": list(residues)},
    )


def odd_s1_factorization() -> TypoEntry:
    from app.services.conjecture_lab import s1_odd_factors

    n = 1
    idx = s_index(1, 2 * n + 1)
    try:
        factors = s1_odd_factors(n)
        product = factors[0] * factors[1] * factors[2]
        at_two = product(2)
        ok = product == stern_poly(idx)
    except NotDivisible as e:
        at_two, ok = None, False
        logger.debug("odd factorization not divisible: %s", e)
    return TypoEntry(
        name="odd-s1-factorization",
        location="displayed factorization of B_{s_{1,2n+1}}",
        printed="(t+1)(1+2t^2+t(t^{2(n+1)}-1)/(t-1)-t^{2n+1}(3t+2))(...)",
        computed=f"B_{{s_{{1,3}}}} = {stern_poly(idx).pretty()}",
        confirmed=not ok,
        evidence={"n": n, "index": idx, "product_at_2": at_two},
    )


CHECKS: List[Callable[[], TypoEntry]] = [
    abstract_recurrence,
    w_initials,
    v3_index_collision,
    s0_expansion,
    quadratic_form,
    table5_label,
    odd_s1_factorization,
]


def build_ledger() -> List[TypoEntry]:
    entries = [check() for check in CHECKS]
    for e in entries:
        logger.info("typo %s: confirmed=%s", e.name, e.confirmed)
    return entries
