from fractions import Fraction

import pytest

from app.core.errors import TooFewSolutions
from app.services.mining import mine_affine_families, solve_quadruple


def test_solve_quadruple():
    triple = solve_quadruple(5, 41, 209, 929)
    assert (triple.p, triple.q, triple.u) == (Fraction(16), Fraction(-12), Fraction(1))
    assert triple.term(4) == 3905
    assert solve_quadruple(5, 41, 209, 931) is None


def test_p_family_is_accepted():
    report = mine_affine_families([5, 41, 209, 929])
    assert report.triples_checked == 1
    assert report.quadruple_count == 1
    [triple] = report.accepted
    assert (triple.p, triple.q, triple.u) == ("16", "-12", "1")
    assert triple.quadruple == [5, 41, 209, 929]
    assert triple.validated_through == 7
    assert not triple.trivial


def test_spurious_fit_is_rejected():
    report = mine_affine_families([5, 29, 253, 1405])
    [triple] = report.rejected
    assert (triple.p, triple.q, triple.u) == ("88/3", "-64", "119/3")
    assert triple.failure_index == 4
    assert triple.failure_value == "6525"
    assert triple.validated_through == 3


def test_too_few_solutions():
    with pytest.raises(TooFewSolutions):
        mine_affine_families([5, 13, 29])
