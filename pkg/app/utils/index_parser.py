import re
from typing import Dict, List

from app.core.errors import IndexParseError, OutOfDomain, UnknownIdentifier
from app.models.family import FamilyId
from app.services.families import family_index


_DECIMAL_RE = re.compile(r"^\s*(\d+)\s*$")
_POWER_RE = re.compile(r"^\s*2\s*\^\s*(\d+)\s*(?:([+-])\s*(\d+))?\s*$")
_FAMILY_RE = re.compile(r"^\s*([A-Za-z][A-Za-z_-]*)\s*\[\s*(\d+)\s*(?:,\s*(\d+)\s*)?\]\s*$")
_RANGE_RE = re.compile(r"^\s*([A-Za-z_]+)\s*=\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")

# names accepted in front of [...]; parameterised families take [param, n]
_FAMILY_NAMES = {
    "p": ("p", True),
    "s": ("s", True),
    "h": ("h", False),
    "H": ("big-h", False),
    "alpha": ("alpha", False),
    "beta": ("beta", False),
}


def parse_index(text: str) -> int:
    """Parse an index literal.

    Examples:
    - "19" -> 19
    - "2^5-1" -> 31
    - "p[3,2]" -> 85
    - "s[0,1]" -> 27
    - "H[1]" -> 19
    """
    if not text or not text.strip():
        raise IndexParseError("empty index literal")

    m = _DECIMAL_RE.match(text)
    if m:
        return int(m.group(1))

    m = _POWER_RE.match(text)
    if m:
        exponent, sign, offset = m.groups()
        value = 2 ** int(exponent)
        if sign:
            value = value + int(offset) if sign == "+" else value - int(offset)
        if value < 0:
            raise IndexParseError(f"'{text}' is negative")
        return value

    m = _FAMILY_RE.match(text)
    if m:
        name, first, second = m.groups()
        if name not in _FAMILY_NAMES:
            raise IndexParseError(f"unknown family '{name}' in '{text}'")
        tag, parameterised = _FAMILY_NAMES[name]
        if parameterised != (second is not None):
            shape = f"{name}[param,n]" if parameterised else f"{name}[n]"
            raise IndexParseError(f"'{text}' should look like {shape}")
        n = int(second) if parameterised else int(first)
        try:
            family = FamilyId(tag, int(first)) if parameterised else FamilyId(tag)
            return family_index(family, n)
        except (OutOfDomain, UnknownIdentifier) as e:
            raise IndexParseError(str(e)) from e

    raise IndexParseError(f"cannot parse index literal '{text}'")


def parse_grid(text: str) -> Dict[str, List[int]]:
    """Parse "k=2..8,n=1..20" into {"k": [2, ..., 8], "n": [1, ..., 20]}; "n=5" gives [5]."""
    grid: Dict[str, List[int]] = {}
    if not text or not text.strip():
        return grid
    for part in text.split(","):
        m = _RANGE_RE.match(part)
        if not m:
            raise IndexParseError(f"malformed range '{part.strip()}' (expected name=a..b)")
        name, lo, hi = m.groups()
        lo_i = int(lo)
        hi_i = lo_i if hi is None else int(hi)
        if hi_i < lo_i:
            raise IndexParseError(f"empty range '{part.strip()}'")
        grid[name] = list(range(lo_i, hi_i + 1))
    return grid
