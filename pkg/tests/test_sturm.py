import random
from fractions import Fraction

import pytest

from app.core.errors import PreconditionViolated, ZeroPolynomial
from app.models.polynomial import ONE, ZERO, IntPolynomial
from app.utils.sturm import (
    count_real_roots,
    eisenstein_irreducible,
    is_increasing,
    odd_multiplicity_part,
    polynomial_gcd,
    pseudo_remainder,
    squarefree_decomposition,
    sturm_chain,
)


def poly(*coefficients):
    return IntPolynomial(coefficients)


def test_count_real_roots_small_cases():
    assert count_real_roots(poly(1, 2)) == 1  # B_5
    assert count_real_roots(poly(1, 3, 3)) == 0  # B_19, discriminant -3
    assert count_real_roots(poly(1, 3, 3, 1)) == 1  # (t+1)^3, one distinct root
    assert count_real_roots(poly(6, -7, 0, 1)) == 3  # (t-1)(t-2)(t+3)
    assert count_real_roots(poly(1, 6, 12, 10, 2)) == 2  # B_173
    assert count_real_roots(ONE) == 0


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        count_real_roots(ZERO)
    with pytest.raises(ZeroPolynomial):
        sturm_chain(ZERO)


def test_pseudo_remainder():
    # 4 * (t^2 + 1) = (2t - 1)(2t + 1) + 5
    r = pseudo_remainder(poly(1, 0, 1), poly(1, 2))
    assert r.degree == 0
    assert r == poly(5)


def test_gcd_and_squarefree():
    b363 = poly(1, 1) * poly(1, 3, 1) ** 2
    assert polynomial_gcd(b363, poly(1, 1)) == poly(1, 1)
    assert squarefree_decomposition(b363) == [(poly(1, 1), 1), (poly(1, 3, 1), 2)]
    assert odd_multiplicity_part(b363) == poly(1, 1)
    assert squarefree_decomposition(poly(7)) == []


def test_is_increasing():
    assert is_increasing(poly(1, 2))
    assert is_increasing(poly(1, 3, 3, 1))  # derivative 3(t+1)^2 keeps its sign
    assert not is_increasing(poly(1, 3, 3))
    assert not is_increasing(poly(1, -2))
    assert not is_increasing(poly(5))


def test_eisenstein():
    # reversed B_13, t^2 + 2t + 2, is Eisenstein at 2
    assert eisenstein_irreducible(poly(2, 2, 1), 2)
    assert not eisenstein_irreducible(poly(1, 2, 2), 2)
    assert not eisenstein_irreducible(poly(4, 6, 4, 1), 2)
    with pytest.raises(PreconditionViolated):
        eisenstein_irreducible(poly(2), 2)


def test_three_simple_roots():
    assert count_real_roots(poly(-1, 1) * poly(-2, 1) * poly(-3, 1)) == 3


def test_root_count_of_random_products():
    rng = random.Random(5)
    for _ in range(60):
        p, roots = poly(rng.choice((-3, -1, 1, 2))), set()
        for _ in range(rng.randint(1, 5)):
            a = rng.choice((-3, -2, -1, 1, 2, 3))
            b = rng.randint(-6, 6)
            p = p * poly(b, a)
            roots.add(Fraction(-b, a))
        for _ in range(rng.randint(0, 2)):
            p = p * poly(1, 0, 1) * rng.choice((-1, 1))
        assert count_real_roots(p) == len(roots)
        assert count_real_roots(p * p) == len(roots)
