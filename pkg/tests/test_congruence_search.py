from fractions import Fraction

import pytest

from app.core.config import settings
from app.core.errors import BadModulus, BoundTooLarge, EvenIndex, OutOfDomain, PreconditionViolated
from app.models.congruence import CongruenceSpec
from app.models.family import ALL_ONES, TWOS
from app.models.polynomial import reduce_mod
from app.services.congruence_search import (
    counts_at,
    enumerate_solutions,
    is_solution,
    pi02_lower_bound,
    resolve_unit_policy,
    sample_points,
    series_curve,
)
from app.services.report_writer import render, write_solutions_csv
from app.services.stern_engine import stern_degree, stern_poly


def brute_force(bound, spec):
    out = []
    for n in range(1, bound + 1, 2):
        residues = reduce_mod(stern_poly(n), spec.m, stern_degree(n))
        if residues.matches(spec.r):
            out.append(n)
    return out


def test_spec_validation():
    with pytest.raises(BadModulus):
        CongruenceSpec(0, 1)
    with pytest.raises(PreconditionViolated):
        CongruenceSpec(3, 3)
    assert CongruenceSpec(1, 2).label == "(1,2)"


def test_is_solution_small_indices():
    assert is_solution(5, CongruenceSpec(0, 2))
    assert is_solution(13, CongruenceSpec(0, 2))
    assert not is_solution(11, CongruenceSpec(0, 2))
    assert is_solution(11, CongruenceSpec(1, 2))
    assert is_solution(19, CongruenceSpec(0, 3))
    assert not is_solution(205, CongruenceSpec(4, 5))
    with pytest.raises(EvenIndex):
        is_solution(4, CongruenceSpec(0, 2))
    with pytest.raises(OutOfDomain):
        is_solution(0, CongruenceSpec(0, 2))


@pytest.mark.parametrize("r,m", [(0, 2), (1, 2), (0, 3), (2, 3), (1, 4)])
def test_tree_walk_matches_brute_force(r, m):
    spec = CongruenceSpec(r, m)
    report = enumerate_solutions(2**10, spec, count_unit=True, split_depth=3)
    assert report.solutions == brute_force(2**10, spec)
    assert report.count == len(report.solutions)


def test_split_depth_and_workers_do_not_change_result():
    spec = CongruenceSpec(0, 2)
    base = enumerate_solutions(2**12, spec, count_unit=True, split_depth=0).solutions
    assert enumerate_solutions(2**12, spec, count_unit=True, split_depth=5).solutions == base
    assert enumerate_solutions(2**12, spec, count_unit=True, split_depth=4, workers=2).solutions == base


@pytest.mark.parametrize("r,m", [(0, 2), (1, 2), (0, 3)])
def test_output_identical_for_1_2_8_workers(r, m):
    spec = CongruenceSpec(r, m)
    outputs = {
        render(write_solutions_csv, enumerate_solutions(2**13, spec, count_unit=False, split_depth=4, workers=w))
        for w in (1, 2, 8)
    }
    assert len(outputs) == 1


def test_unit_index_policy(monkeypatch):
    spec = CongruenceSpec(0, 2)
    assert 1 in enumerate_solutions(64, spec, count_unit=True).solutions
    assert 1 not in enumerate_solutions(64, spec, count_unit=False).solutions
    monkeypatch.setattr(settings, "COUNT_UNIT_INDEX", False)
    assert resolve_unit_policy() is False
    report = enumerate_solutions(64, spec)
    assert report.unit_index_counted is False
    assert report.solutions[:4] == [5, 13, 29, 41]


def test_mod_three_solutions():
    zero = enumerate_solutions(2**15, CongruenceSpec(0, 3), count_unit=False)
    assert zero.solutions == [19, 181, 29899]

    one = enumerate_solutions(2**13, CongruenceSpec(1, 3), exclusions=[ALL_ONES], count_unit=False)
    assert one.solutions == [157, 4789]
    assert one.exclusions == ["trivial-all-ones"]

    two = enumerate_solutions(2**12, CongruenceSpec(2, 3), exclusions=[TWOS], count_unit=False)
    assert two.solutions == [83, 359, 631, 2633]


def test_bound_checks():
    spec = CongruenceSpec(0, 2)
    with pytest.raises(BoundTooLarge):
        enumerate_solutions(2**40, spec, count_unit=True)
    with pytest.raises(BoundTooLarge):
        enumerate_solutions(100, spec, cap=64, count_unit=True)
    with pytest.raises(PreconditionViolated):
        enumerate_solutions(0, spec, count_unit=True)


def test_sampling_helpers():
    assert sample_points(100, 4) == [25, 50, 75, 100]
    assert counts_at([5, 13, 29], [10, 29]) == [(10, 1), (29, 3)]
    assert pi02_lower_bound(2**15) == Fraction(92)
    with pytest.raises(PreconditionViolated):
        sample_points(100, 1)


def test_series_curve(monkeypatch):
    monkeypatch.setattr(settings, "COUNT_UNIT_INDEX", True)
    points = series_curve("pi02", 64, 4)
    assert [p.x for p in points] == [16, 32, 48, 64]
    assert all(p.series == "pi02" for p in points)
    assert points[-1].value == len(brute_force(64, CongruenceSpec(0, 2)))
    with pytest.raises(PreconditionViolated):
        series_curve("pi99", 64, 4)
