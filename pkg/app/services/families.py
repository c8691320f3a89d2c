from __future__ import annotations

import math
from typing import Callable, Dict, List

from app.core.errors import OutOfDomain
from app.models.family import (
    ALPHA,
    BETA,
    BIG_H,
    H,
    P,
    S,
    TRIVIAL_ALL_ONES,
    TRIVIAL_TWOS,
    FamilyId,
)


def trivial_all_ones(n: int) -> int:
    return 2 ** (n + 1) - 1


def trivial_twos(n: int) -> int:
    return 2 ** (n + 2) - 3


def p_index(k: int, n: int) -> int:
    return 2 ** (2 * n + k) - 3 * 2 ** (n + k - 1) + 2**k - 3


# (a, b, c, d): s_{i,n} = 2^(2n+a) - b*2^(n+c) - d
_S_SHAPES = {
    0: (4, 9, 1, 1),
    1: (5, 9, 2, 5),
    2: (8, 9, 4, 13),
    3: (8, 51, 2, 1),
}


def s_index(i: int, n: int) -> int:
    a, b, c, d = _S_SHAPES[i]
    return 2 ** (2 * n + a) - b * 2 ** (n + c) - d


def h_index(n: int) -> int:
    return 2 * (4**n - 1) * (2 * 4**n + 1) // 3 + 1


def big_h_index(n: int) -> int:
    return h_index((3**n - 1) // 2)


def jacobsthal(n: int) -> int:
    """alpha_n = (2^n - (-1)^n) / 3, any n >= 0."""
    return (2**n - (-1) ** n) // 3


def beta_index(n: int) -> int:
    return (5 * 2 ** (n - 2) + (-1) ** n) // 3


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


_GENERATORS: Dict[str, Callable[[FamilyId, int], int]] = {
    TRIVIAL_ALL_ONES: lambda f, n: trivial_all_ones(n),
    TRIVIAL_TWOS: lambda f, n: trivial_twos(n),
    P: lambda f, n: p_index(f.param, n),
    S: lambda f, n: s_index(f.param, n),
    H: lambda f, n: h_index(n),
    BIG_H: lambda f, n: big_h_index(n),
    ALPHA: lambda f, n: jacobsthal(n),
    BETA: lambda f, n: beta_index(n),
}


def family_index(f: FamilyId, n: int) -> int:
    if n < f.domain_start:
        raise OutOfDomain(f"family {f.name} is defined for n >= {f.domain_start}, got {n}")
    return _GENERATORS[f.tag](f, n)


def family_members(f: FamilyId, bound: int) -> List[int]:
    """All members <= bound, in increasing order."""
    out: List[int] = []
    n = f.domain_start
    while True:
        value = family_index(f, n)
        if value > bound:
            return out
        out.append(value)
        n += 1


def family_contains(f: FamilyId, value: int) -> bool:
    if f.tag == TRIVIAL_ALL_ONES:
        return value >= 1 and (value + 1) & value == 0
    if f.tag == TRIVIAL_TWOS:
        v = value + 3
        return v >= 4 and v & (v - 1) == 0
    members = family_members(f, value)
    return bool(members) and members[-1] == value


def p_index_limit(k: int, x: int) -> int:
    """Largest n with p_{k,n} <= x from the closed-form solution of the quadratic in 2^n.

    Valid for x > 2^k; floating point, so callers compare against exact counts.
    """
    if x <= 2**k:
        return 0
    root = math.sqrt((16 * x + 48 - 7 * 2**k) / 2**k)
    return max(0, math.floor(math.log2((3 + root) / 4)))


def p_count_for_k(k: int, bound: int) -> int:
    """Exact number of n >= 1 with p_{k,n} < bound."""
    n = 0
    while p_index(k, n + 1) < bound:
        n += 1
    return n


def count_p_below(bound: int) -> int:
    """Number of distinct p_{k,n} (k >= 2, n >= 1) strictly below bound."""
    values = set()
    k = 2
    # p_{k,1} = 2^(k+1) - 3 grows with k
    while p_index(k, 1) < bound:
        n = 1
        while p_index(k, n) < bound:
            values.add(p_index(k, n))
            n += 1
        k += 1
    return len(values)
