import pytest

from app.core.errors import OutOfDomain, UndefinedDegree
from app.models.polynomial import ZERO, IntPolynomial
from app.services.stern_engine import (
    binary_digits,
    gf_prefix,
    hyperbinary_poly,
    stern_degree,
    stern_number,
    stern_pair,
    stern_poly,
    stern_table,
)

STERN_PREFIX = [0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1, 5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3, 7, 4, 5]


def poly(*coefficients):
    return IntPolynomial(coefficients)


def test_known_polynomials():
    assert stern_poly(0) == ZERO
    assert stern_poly(1) == poly(1)
    assert stern_poly(2) == poly(0, 1)
    assert stern_poly(5) == poly(1, 2)
    assert stern_poly(11) == poly(1, 3, 1)
    assert stern_poly(13) == poly(1, 2, 2)
    assert stern_poly(19) == poly(1, 3, 3)
    assert stern_poly(27) == poly(1, 3, 3, 1)
    assert stern_poly(41) == poly(1, 4, 4, 2)
    assert stern_poly(85) == poly(1, 6, 10, 4)
    assert stern_poly(173) == poly(1, 6, 12, 10, 2)
    assert stern_poly(205) == poly(1, 4, 9, 10, 5)
    assert stern_poly(2**5 - 1) == poly(1, 1, 1, 1, 1)


def test_pair_is_consecutive():
    pair = stern_pair(12)
    assert pair.lo == stern_poly(12)
    assert pair.hi == stern_poly(13)
    assert pair.index == 12


def test_stern_numbers():
    assert [stern_number(n) for n in range(32)] == STERN_PREFIX


def test_values_at_one_and_two():
    for n, b in enumerate(stern_table(300)):
        assert b(1) == stern_number(n)
        assert b(2) == n


def test_degree_matches_polynomial():
    for n in range(1, 600):
        assert stern_degree(n) == stern_poly(n).degree
    assert stern_degree(2**10 - 1) == 9
    with pytest.raises(UndefinedDegree):
        stern_degree(0)


def test_oracles_agree():
    table = stern_table(512)
    gf = gf_prefix(512)
    assert len(gf) == 513
    for n in range(1, 513):
        assert stern_poly(n) == table[n]
        assert gf[n] == table[n]
        assert hyperbinary_poly(n - 1) == table[n]


def test_negative_index_rejected():
    with pytest.raises(OutOfDomain):
        stern_poly(-1)
    with pytest.raises(OutOfDomain):
        stern_number(-3)
    with pytest.raises(OutOfDomain):
        gf_prefix(0)


def test_binary_digits():
    assert binary_digits(19) == (1, 0, 0, 1, 1)
