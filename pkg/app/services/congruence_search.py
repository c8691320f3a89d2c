from __future__ import annotations

import logging
import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from app.core.config import settings
from app.core.errors import BoundTooLarge, EvenIndex, OutOfDomain, PreconditionViolated
from app.models.congruence import CongruenceSpec
from app.models.family import FamilyId
from app.models.polynomial import ModPolynomial, add_residues, shift_residues
from app.models.report import SearchReport
from app.services import checkpoint as ckpt
from app.services.families import family_contains
from app.services.parallel import ordered_imap, resolve_workers

logger = logging.getLogger(__name__)

Residues = Tuple[int, ...]

CALIBRATION_SPEC = CongruenceSpec(0, 2)
CALIBRATION_BOUND = 2**15
CALIBRATION_EXPECTED = 97

SERIES = ("pi02", "pi12", "ratio", "norm02", "norm12")


def _matches(lo: Residues, r: int) -> bool:
    if r == 1:
        return lo.count(1) == len(lo)
    return lo[0] == 1 and lo.count(r) == len(lo) - 1


def is_solution(n: int, spec: CongruenceSpec) -> bool:
    """Decide the congruence for odd n with the pair scan carried out in Z/m."""
    if n < 1:
        raise OutOfDomain(f"index must be a positive odd integer, got {n}")
    if n % 2 == 0:
        raise EvenIndex(f"only odd indices are considered, got {n}")
    m = spec.m
    lo = ModPolynomial(m, ())
    hi = ModPolynomial(m, (1,))
    for bit in bin(n)[2:]:
        if bit == "0":
            lo, hi = lo.shift(), lo + hi
        else:
            lo, hi = lo + hi, hi.shift()
    # residue tuples carry the exact degree: shifts add one slot, sums keep the longer length
    return lo.matches(spec.r)


# ---------------------------------------------------------------------------
# tree walk


def _walk_subtree(task: Tuple[int, Residues, Residues, int, int, int]) -> Tuple[int, List[int], int]:
    """DFS below root carrying (B_k, B_{k+1}) mod m; returns (root, sorted odd solutions, nodes visited)."""
    root, lo, hi, r, m, bound = task
    found: List[int] = []
    visited = 0
    stack = [(root, lo, hi)]
    while stack:
        k, lo, hi = stack.pop()
        visited += 1
        if k & 1 and _matches(lo, r):
            found.append(k)
        left = k << 1
        if left > bound:
            continue
        s = add_residues(lo, hi, m)
        if left + 1 <= bound:
            stack.append((left + 1, s, shift_residues(hi)))
        stack.append((left, shift_residues(lo), s))
    found.sort()
    return root, found, visited


def _walk_top(spec: CongruenceSpec, bound: int, depth: int) -> Tuple[List[int], int, List[Tuple[int, Residues, Residues]]]:
    """Levels 0..depth-1 of the tree rooted at 1, plus the frontier at level `depth`."""
    r, m = spec.r, spec.m
    level = [(1, (1,), (0, 1))]
    found: List[int] = []
    visited = 0
    for _ in range(depth):
        nxt = []
        for k, lo, hi in level:
            visited += 1
            if k & 1 and _matches(lo, r):
                found.append(k)
            left = k << 1
            if left > bound:
                continue
            s = add_residues(lo, hi, m)
            nxt.append((left, shift_residues(lo), s))
            if left + 1 <= bound:
                nxt.append((left + 1, s, shift_residues(hi)))
        level = nxt
    return sorted(found), visited, sorted(level)


def _raw_solutions(
    spec: CongruenceSpec,
    bound: int,
    workers: int,
    depth: int,
    checkpoint_path: Optional[Union[str, Path]] = None,
    resume_path: Optional[Union[str, Path]] = None,
) -> Tuple[List[int], int]:
    top, visited, frontier = _walk_top(spec, bound, depth)
    state = ckpt.new_state(spec, bound, depth)
    if resume_path is not None:
        state = ckpt.load_checkpoint(resume_path)
        ckpt.check_compatible(state, spec, bound, depth)
    done = set(state.completed_subtrees)
    solutions = list(state.partial_solutions)
    visited += state.visited
    tasks = [(root, lo, hi, spec.r, spec.m, bound) for root, lo, hi in frontier if root not in done]

    since_write = 0
    for root, found, count in ordered_imap(_walk_subtree, tasks, workers=workers):
        solutions.extend(found)
        visited += count
        since_write += count
        state.completed_subtrees.append(root)
        state.partial_solutions.extend(found)
        state.visited += count
        if checkpoint_path is not None and since_write >= settings.CHECKPOINT_EVERY:
            ckpt.save_checkpoint(checkpoint_path, state)
            since_write = 0
    if checkpoint_path is not None:
        ckpt.save_checkpoint(checkpoint_path, state)
    return sorted(top + solutions), visited


def _check_bound(bound: int, cap: Optional[int]) -> None:
    limit = settings.STERN_CAP if cap is None else cap
    if bound < 1:
        raise PreconditionViolated(f"search bound must be >= 1, got {bound}")
    if bound > limit:
        raise BoundTooLarge(f"bound {bound} exceeds the search cap {limit} (set STERN_CAP or --cap to raise it)")


@lru_cache(maxsize=1)
def _calibrate_unit_index() -> bool:
    sols, _ = _raw_solutions(CALIBRATION_SPEC, CALIBRATION_BOUND, workers=1, depth=0)
    with_unit = len(sols)
    without_unit = len([n for n in sols if n != 1])
    if with_unit == CALIBRATION_EXPECTED:
        decision = True
    elif without_unit == CALIBRATION_EXPECTED:
        decision = False
    else:
        logger.warning(
            "calibration found %d solutions of (0,2) up to 2^15 (expected %d either way); counting n=1",
            with_unit,
            CALIBRATION_EXPECTED,
        )
        decision = True
    logger.info("n=1 calibration: %d with, %d without -> count n=1: %s", with_unit, without_unit, decision)
    return decision


def resolve_unit_policy() -> bool:
    """Whether n = 1 (vacuous solution, e(1) = 0) is counted."""
    if settings.COUNT_UNIT_INDEX is not None:
        return settings.COUNT_UNIT_INDEX
    return _calibrate_unit_index()


def enumerate_solutions(
    bound: int,
    spec: CongruenceSpec,
    exclusions: Iterable[FamilyId] = (),
    workers: Optional[int] = None,
    split_depth: Optional[int] = None,
    cap: Optional[int] = None,
    checkpoint_path: Optional[Union[str, Path]] = None,
    resume_path: Optional[Union[str, Path]] = None,
    count_unit: Optional[bool] = None,
) -> SearchReport:
    _check_bound(bound, cap)
    n_workers = resolve_workers(workers)
    depth = settings.SPLIT_DEPTH if split_depth is None else split_depth
    excluded = list(exclusions)
    unit = resolve_unit_policy() if count_unit is None else count_unit
    logger.info("search %s up to %d with %d worker(s), split depth %d", spec.label, bound, n_workers, depth)

    raw, visited = _raw_solutions(spec, bound, n_workers, depth, checkpoint_path, resume_path)
    solutions = [
        n for n in raw
        if (unit or n != 1) and not any(family_contains(f, n) for f in excluded)
    ]
    logger.info("search %s up to %d: %d solutions, %d nodes", spec.label, bound, len(solutions), visited)
    return SearchReport(
        r=spec.r,
        m=spec.m,
        bound=bound,
        solutions=solutions,
        count=len(solutions),
        exclusions=[f.name for f in excluded],
        unit_index_counted=unit,
        workers=n_workers,
        visited=visited,
    )


def pi(spec: CongruenceSpec, bound: int, workers: Optional[int] = None) -> int:
    return enumerate_solutions(bound, spec, workers=workers).count


def counts_at(solutions: Sequence[int], points: Iterable[int]) -> List[Tuple[int, int]]:
    return [(x, bisect_right(solutions, x)) for x in points]


def sample_points(x_max: int, samples: int) -> List[int]:
    if samples < 2:
        raise PreconditionViolated(f"need at least 2 samples, got {samples}")
    return sorted({max(1, -(-i * x_max // samples)) for i in range(1, samples + 1)})


def pi_curve(spec: CongruenceSpec, x_max: int, samples: int, workers: Optional[int] = None) -> List[Tuple[int, int]]:
    """(x, Pi(x)) at sample points, from a single sweep to x_max."""
    points = sample_points(x_max, samples)
    report = enumerate_solutions(x_max, spec, workers=workers)
    return counts_at(report.solutions, points)


@dataclass(frozen=True)
class CurvePoint:
    x: int
    value: Union[int, float]
    series: str


def series_curve(series: str, x_max: int, samples: int, workers: Optional[int] = None) -> List[CurvePoint]:
    if series not in SERIES:
        raise PreconditionViolated(f"unknown series '{series}', expected one of {', '.join(SERIES)}")
    if series in ("pi02", "pi12"):
        spec = CongruenceSpec(0 if series == "pi02" else 1, 2)
        return [CurvePoint(x, c, series) for x, c in pi_curve(spec, x_max, samples, workers)]
    if series == "ratio":
        zero = pi_curve(CongruenceSpec(0, 2), x_max, samples, workers)
        one = pi_curve(CongruenceSpec(1, 2), x_max, samples, workers)
        return [CurvePoint(x, a / b, series) for (x, a), (_, b) in zip(zero, one) if b]
    spec = CongruenceSpec(0 if series == "norm02" else 1, 2)
    return [
        CurvePoint(x, c / math.log2(x) ** 2, series)
        for x, c in pi_curve(spec, x_max, samples, workers)
        if x >= 2
    ]


# ---------------------------------------------------------------------------
# lower bounds


def pi02_lower_bound(x: int) -> Fraction:
    k = x.bit_length() - 1
    return Fraction(k * k - 3 * k + 4, 2)


def pi12_lower_bound(x: int) -> float:
    return math.log2(x)


def pi03_lower_bound(x: int) -> float:
    return math.log(math.log2((1 + math.sqrt(3 * (3 + 4 * x))) / 2), 3)
