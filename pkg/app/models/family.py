from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from app.core.errors import UnknownIdentifier


TRIVIAL_ALL_ONES = "trivial-all-ones"
TRIVIAL_TWOS = "trivial-twos"
P = "p"
S = "s"
H = "h"
BIG_H = "big-h"
ALPHA = "alpha"
BETA = "beta"

# smallest admissible n per tag
DOMAIN_START = {
    TRIVIAL_ALL_ONES: 0,
    TRIVIAL_TWOS: 0,
    P: 1,
    S: 1,
    H: 0,
    BIG_H: 0,
    ALPHA: 2,
    BETA: 2,
}

_PARAMETRIZED = {P, S}


@dataclass(frozen=True)
class FamilyId:
    tag: str
    param: Optional[int] = None

    def __post_init__(self) -> None:
        if self.tag not in DOMAIN_START:
            raise UnknownIdentifier(f"unknown family '{self.tag}'")
        if self.tag in _PARAMETRIZED and self.param is None:
            raise UnknownIdentifier(f"family '{self.tag}' needs a parameter")
        if self.tag == P and self.param < 2:
            raise UnknownIdentifier(f"family p needs k >= 2, got {self.param}")
        if self.tag == S and self.param not in (0, 1, 2, 3):
            raise UnknownIdentifier(f"family s needs i in 0..3, got {self.param}")

    @property
    def domain_start(self) -> int:
        return DOMAIN_START[self.tag]

    @property
    def name(self) -> str:
        return f"{self.tag}{self.param}" if self.param is not None else self.tag

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        """Accepts e.g. 'trivial-all-ones', 'p3', 'P{3}', 's0', 'big-h', 'alpha'."""
        raw = (text or "").strip()
        low = raw.lower().replace("_", "-")
        if low in ("trivialallones", "all-ones"):
            low = TRIVIAL_ALL_ONES
        if low in ("trivialtwos", "twos"):
            low = TRIVIAL_TWOS
        if low in ("bigh",) or raw == "H":
            low = BIG_H
        m = re.fullmatch(r"([ps])\{?(\d+)\}?", low)
        if m:
            return cls(m.group(1), int(m.group(2)))
        return cls(low)


ALL_ONES = FamilyId(TRIVIAL_ALL_ONES)
TWOS = FamilyId(TRIVIAL_TWOS)
