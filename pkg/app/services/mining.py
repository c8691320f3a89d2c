from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple

from app.core.errors import TooFewSolutions
from app.models.congruence import AffineTriple, CongruenceSpec
from app.models.report import MinedTriple, MiningReport
from app.services.congruence_search import is_solution

logger = logging.getLogger(__name__)


def solve_quadruple(a: int, b: int, c: int, d: int) -> Optional[AffineTriple]:
    """(p, q, u) with p*4^i + q*2^i + u = (a, b, c, d)[i], or None if the fourth equation disagrees."""
    p6, q6, u6 = _solve_scaled(a, b, c)
    if 64 * p6 + 8 * q6 + u6 != 6 * d:
        return None
    return AffineTriple(Fraction(p6, 6), Fraction(q6, 6), Fraction(u6, 6))


def _solve_scaled(a: int, b: int, c: int) -> Tuple[int, int, int]:
    # 6p, 6q, 6u from the first three equations
    p6 = c - 3 * b + 2 * a
    q6 = 6 * (b - a) - 3 * p6
    u6 = 6 * a - p6 - q6
    return p6, q6, u6


def validate_triple(triple: AffineTriple, spec: CongruenceSpec, depth: int) -> Tuple[int, Optional[int], Optional[Fraction], Optional[str]]:
    """Check U_4 .. U_{3+depth}; returns (last validated index, failing index, failing value, reason)."""
    previous = triple.term(3)
    for i in range(4, 4 + depth):
        value = triple.term(i)
        if value.denominator != 1:
            return i - 1, i, value, "not an integer"
        n = value.numerator
        if n <= previous:
            return i - 1, i, value, "sequence not increasing"
        if n % 2 == 0:
            return i - 1, i, value, "even index"
        if not is_solution(n, spec):
            return i - 1, i, value, f"not a solution of {spec.label}"
        previous = value
    return 3 + depth, None, None, None


def mine_affine_families(
    solutions: Sequence[int],
    validation_depth: int = 4,
    spec: CongruenceSpec = CongruenceSpec(0, 2),
) -> MiningReport:
    """Fit U_n = p*4^n + q*2^n + u through every increasing quadruple of known solutions.

    Quadruples are walked as triples (a, b, c): the fitted family fixes d = U_3,
    which is then looked up among the solutions.
    """
    values = sorted(set(solutions))
    if len(values) < 4:
        raise TooFewSolutions(f"need at least 4 solutions to mine families, got {len(values)}")
    members = set(values)
    top = values[-1]
    found: List[MinedTriple] = []
    checked = 0
    for a, b, c in combinations(values, 3):
        if c == top:
            continue
        checked += 1
        p6, q6, u6 = _solve_scaled(a, b, c)
        d6 = 64 * p6 + 8 * q6 + u6
        if d6 % 6 or d6 // 6 <= c or d6 // 6 not in members:
            continue
        d = d6 // 6
        triple = AffineTriple(Fraction(p6, 6), Fraction(q6, 6), Fraction(u6, 6))
        through, fail_i, fail_v, reason = validate_triple(triple, spec, validation_depth)
        p, q, u = triple.as_strings()
        found.append(
            MinedTriple(
                quadruple=[a, b, c, d],
                p=p,
                q=q,
                u=u,
                trivial=triple.is_trivial,
                accepted=fail_i is None,
                validated_through=through,
                failure_index=fail_i,
                failure_value=None if fail_v is None else str(fail_v),
                failure_reason=reason,
            )
        )
    logger.info("mined %d triples from %d solutions (%d accepted)", len(found), len(values), sum(t.accepted for t in found))
    return MiningReport(
        r=spec.r,
        m=spec.m,
        input_size=len(values),
        validation_depth=validation_depth,
        quadruple_count=comb(len(values), 4),
        triples_checked=checked,
        triples=found,
    )
