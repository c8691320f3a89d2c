from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from app.core.config import settings
from app.core.errors import BadModulus, PreconditionViolated


@dataclass(frozen=True)
class CongruenceSpec:
    """The pair (r, m): B_n(t) = 1 + r(t + ... + t^e(n)) mod m."""

    r: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.m > settings.MAX_MODULUS:
            raise BadModulus(f"modulus must lie in 2..{settings.MAX_MODULUS}, got {self.m}")
        if not 0 <= self.r < self.m:
            raise PreconditionViolated(f"residue r={self.r} must satisfy 0 <= r < m={self.m}")

    @property
    def label(self) -> str:
        return f"({self.r},{self.m})"

    def as_dict(self) -> dict:
        return {"r": self.r, "m": self.m}


@dataclass(frozen=True)
class AffineTriple:
    """Candidate family U_n = p*4^n + q*2^n + u."""

    p: Fraction
    q: Fraction
    u: Fraction

    def term(self, n: int) -> Fraction:
        return self.p * 4**n + self.q * 2**n + self.u

    @property
    def is_trivial(self) -> bool:
        # q*2^n + u: the fixed-offset shapes 2^n - k
        return self.p == 0

    def as_strings(self) -> Tuple[str, str, str]:
        return (str(self.p), str(self.q), str(self.u))
