from __future__ import annotations

from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

from app.core.config import settings
from app.core.errors import BadModulus, NotDivisible, PreconditionViolated


DEGREE_OF_ZERO = -1


def _strip(coefficients: Iterable[int]) -> Tuple[int, ...]:
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial:
    """Dense polynomial over Z in t. Index i holds the coefficient of t^i.

    Instances are immutable and always canonical: no trailing zeros, and the
    zero polynomial is the empty tuple.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()) -> None:
        object.__setattr__(self, "coefficients", _strip(int(c) for c in coefficients))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_text(cls, text: str) -> "IntPolynomial":
        """Parse the ascending comma-separated form, e.g. "1,2" for 1+2t."""
        body = (text or "").strip()
        if not body:
            return cls()
        return cls(int(part) for part in body.split(","))

    # --- shape -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1 if self.coefficients else DEGREE_OF_ZERO

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def constant_term(self) -> int:
        return self.coefficients[0] if self.coefficients else 0

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    # --- ring operations -------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return add(self, other)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return add(self, -other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coefficients)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        result = ONE
        for _ in range(e):
            result = mul(result, self)
        return result

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by t^k."""
        if not self.coefficients:
            return self
        return IntPolynomial((0,) * k + self.coefficients)

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, int):
            return self.coefficients == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    # --- text forms ------------------------------------------------------

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coefficients) or "0"

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    def pretty(self) -> str:
        """Descending human form, e.g. 2t^2+2t+1."""
        if not self.coefficients:
            return "0"
        parts: List[str] = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if i == 1 else f"t^{i}")
            parts.append(f"{sign}{body}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def __repr__(self) -> str:
        return f"IntPolynomial({self.pretty()})"


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
T = IntPolynomial((0, 1))


def add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    x, y = a.coefficients, b.coefficients
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    for i, c in enumerate(y):
        out[i] += c
    return IntPolynomial(out)


def mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    x, y = a.coefficients, b.coefficients
    if not x or not y:
        return ZERO
    out = [0] * (len(x) + len(y) - 1)
    for i, ci in enumerate(x):
        if ci == 0:
            continue
        for j, cj in enumerate(y):
            out[i + j] += ci * cj
    return IntPolynomial(out)


def geometric(n: int) -> IntPolynomial:
    """1 + t + ... + t^(n-1); zero for n = 0."""
    return IntPolynomial([1] * max(n, 0))


def divide_exact(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    if den.is_zero():
        raise NotDivisible("division by the zero polynomial")
    rem = list(num.coefficients)
    db = den.degree
    lc = den.leading_coefficient
    if len(rem) - 1 < db:
        if rem:
            raise NotDivisible(f"remainder {IntPolynomial(rem).pretty()} left dividing by {den.pretty()}")
        return ZERO
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        top = rem[k + db]
        if top == 0:
            continue
        q, r = divmod(top, lc)
        if r:
            raise NotDivisible(f"non-integral quotient coefficient {top}/{lc} dividing by {den.pretty()}")
        quot[k] = q
        for j, c in enumerate(den.coefficients):
            rem[k + j] -= q * c
    if any(rem):
        raise NotDivisible(f"remainder {IntPolynomial(rem).pretty()} left dividing by {den.pretty()}")
    return IntPolynomial(quot)


def evaluate(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def derivative(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(i * c for i, c in enumerate(p.coefficients) if i > 0)


def reverse(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(reversed(p.coefficients))


def content(p: IntPolynomial) -> int:
    g = 0
    for c in p.coefficients:
        g = gcd(g, c)
    return g


def primitive_part(p: IntPolynomial) -> IntPolynomial:
    """p divided by its (positive) content."""
    g = content(p)
    if g <= 1:
        return p
    return IntPolynomial(c // g for c in p.coefficients)


# ---------------------------------------------------------------------------
# Z/m


def _check_modulus(m: int) -> None:
    if m < 2 or m > settings.MAX_MODULUS:
        raise BadModulus(f"modulus must lie in 2..{settings.MAX_MODULUS}, got {m}")


def add_residues(a: Sequence[int], b: Sequence[int], m: int) -> Tuple[int, ...]:
    """Coefficient-wise sum mod m; the result is as long as the longer input."""
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        s = out[i] + c
        out[i] = s - m if s >= m else s
    return tuple(out)


def shift_residues(a: Tuple[int, ...]) -> Tuple[int, ...]:
    return (0,) + a if a else a


class ModPolynomial:
    """Polynomial over Z/m carrying a formal degree.

    The stored tuple has exactly formal_degree + 1 residues (none for the
    zero polynomial), so trailing zeros are kept where reduction killed the
    leading coefficient.
    """

    __slots__ = ("modulus", "coefficients")

    def __init__(self, modulus: int, coefficients: Iterable[int]) -> None:
        _check_modulus(modulus)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coefficients", tuple(c % modulus for c in coefficients))

    def __setattr__(self, name, value):
        raise AttributeError("ModPolynomial is immutable")

    @property
    def formal_degree(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: "ModPolynomial") -> "ModPolynomial":
        if other.modulus != self.modulus:
            raise BadModulus(f"moduli differ: {self.modulus} vs {other.modulus}")
        return ModPolynomial(self.modulus, add_residues(self.coefficients, other.coefficients, self.modulus))

    def __mul__(self, other: "ModPolynomial") -> "ModPolynomial":
        if other.modulus != self.modulus:
            raise BadModulus(f"moduli differ: {self.modulus} vs {other.modulus}")
        x, y = self.coefficients, other.coefficients
        if not x or not y:
            return ModPolynomial(self.modulus, ())
        out = [0] * (len(x) + len(y) - 1)
        for i, ci in enumerate(x):
            for j, cj in enumerate(y):
                out[i + j] += ci * cj
        return ModPolynomial(self.modulus, out)

    def shift(self) -> "ModPolynomial":
        return ModPolynomial(self.modulus, shift_residues(self.coefficients))

    def matches(self, r: int) -> bool:
        """Constant residue 1 and every other stored residue equal to r."""
        c = self.coefficients
        if not c or c[0] != 1 % self.modulus:
            return False
        target = r % self.modulus
        return all(x == target for x in c[1:])

    def trimmed(self) -> Tuple[int, ...]:
        return _strip(self.coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModPolynomial):
            return NotImplemented
        return self.modulus == other.modulus and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.modulus, self.coefficients))

    def __repr__(self) -> str:
        return f"ModPolynomial(mod {self.modulus}: {','.join(map(str, self.coefficients))})"


def reduce_mod(p: IntPolynomial, m: int, formal_degree: int) -> ModPolynomial:
    """Reduce p into Z/m, padded with zero residues up to formal_degree."""
    _check_modulus(m)
    if formal_degree < p.degree:
        raise PreconditionViolated(f"formal degree {formal_degree} is below deg p = {p.degree}")
    coeffs = list(p.coefficients) + [0] * (formal_degree + 1 - len(p.coefficients))
    return ModPolynomial(m, coeffs)
