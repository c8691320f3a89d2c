from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from app.core.errors import PreconditionViolated, ZeroPolynomial
from app.models.polynomial import (
    ONE,
    IntPolynomial,
    derivative,
    divide_exact,
    mul,
    primitive_part,
)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """lc(b)^(deg a - deg b + 1) * a  mod  b, computed over Z."""
    if b.is_zero():
        raise ZeroPolynomial("pseudo-remainder by the zero polynomial")
    db = b.degree
    e = a.degree - db + 1
    if e <= 0:
        return a
    lc = b.leading_coefficient
    bc = b.coefficients
    r = list(a.coefficients)
    while r and len(r) - 1 >= db:
        top = r[-1]
        offset = len(r) - 1 - db
        r = [lc * c for c in r]
        for j, c in enumerate(bc):
            r[offset + j] -= top * c
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    factor = lc ** e
    return IntPolynomial(c * factor for c in r)


@dataclass(frozen=True)
class SturmChain:
    chain: Tuple[IntPolynomial, ...]

    def variations_at_plus_infinity(self) -> int:
        return _variations([_sign(p.leading_coefficient) for p in self.chain])

    def variations_at_minus_infinity(self) -> int:
        return _variations([_sign(p.leading_coefficient) * (-1) ** p.degree for p in self.chain])


def _variations(signs: List[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for x, y in zip(nonzero, nonzero[1:]) if x != y)


def sturm_chain(p: IntPolynomial) -> SturmChain:
    """Signed primitive pseudo-remainder sequence starting at p, p'.

    Each step keeps the sign of the true negated remainder and divides only by
    a positive content, so sign variations are those of the classical chain.
    """
    if p.is_zero():
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    chain = [primitive_part(p)]
    d = derivative(p)
    if d.is_zero():
        return SturmChain(tuple(chain))
    chain.append(primitive_part(d))
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = pseudo_remainder(a, b)
        if r.is_zero():
            break
        delta = a.degree - b.degree
        # prem = lc(b)^(delta+1) * rem; flip so the entry is a positive multiple of -rem
        if b.leading_coefficient < 0 and (delta + 1) % 2 == 1:
            r = -r
        chain.append(primitive_part(-r))
    return SturmChain(tuple(chain))


def count_real_roots(p: IntPolynomial) -> int:
    """Number of distinct real roots of p."""
    chain = sturm_chain(p)
    return chain.variations_at_minus_infinity() - chain.variations_at_plus_infinity()


# ---------------------------------------------------------------------------
# gcd and square-free decomposition over Z


def _normalized(p: IntPolynomial) -> IntPolynomial:
    p = primitive_part(p)
    return -p if p.leading_coefficient < 0 else p


def polynomial_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (content ignored)."""
    if a.is_zero():
        return _normalized(b)
    if b.is_zero():
        return _normalized(a)
    a, b = _normalized(a), _normalized(b)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, (_normalized(r) if not r.is_zero() else r)
    return _normalized(a)


def squarefree_decomposition(p: IntPolynomial) -> List[Tuple[IntPolynomial, int]]:
    """[(f_i, i)] with primitive square-free f_i and p = c * prod f_i^i."""
    if p.is_zero():
        raise ZeroPolynomial("square-free decomposition of the zero polynomial")
    p = _normalized(p)
    if p.degree <= 0:
        return []
    g = polynomial_gcd(p, derivative(p))
    w = _normalized(divide_exact(p, g))
    out: List[Tuple[IntPolynomial, int]] = []
    i = 1
    while w.degree > 0:
        y = polynomial_gcd(w, g)
        z = _normalized(divide_exact(w, y))
        if z.degree > 0:
            out.append((z, i))
        w = y
        g = _normalized(divide_exact(g, y))
        i += 1
    return out


def odd_multiplicity_part(p: IntPolynomial) -> IntPolynomial:
    """Product of the square-free factors of p occurring to an odd power."""
    result = ONE
    for factor, mult in squarefree_decomposition(p):
        if mult % 2 == 1:
            result = mul(result, factor)
    return result


def is_increasing(p: IntPolynomial) -> bool:
    """Exact test that t -> p(t) is strictly increasing on R."""
    if p.degree < 1:
        return False
    d = derivative(p)
    if d.degree == 0:
        return d.leading_coefficient > 0
    # p' keeps one sign iff no root of odd multiplicity
    if count_real_roots(odd_multiplicity_part(d)) != 0:
        return False
    return d.leading_coefficient > 0


def eisenstein_irreducible(p: IntPolynomial, q: int) -> bool:
    if p.degree < 1:
        raise PreconditionViolated("Eisenstein criterion needs degree >= 1")
    coeffs = p.coefficients
    if coeffs[-1] % q == 0:
        return False
    if any(c % q for c in coeffs[:-1]):
        return False
    return coeffs[0] % (q * q) != 0
