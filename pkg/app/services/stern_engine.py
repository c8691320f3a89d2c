from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from app.core.errors import OutOfDomain, UndefinedDegree
from app.models.polynomial import ONE, ZERO, IntPolynomial, add


@dataclass(frozen=True)
class SternPair:
    lo: IntPolynomial  # B_k
    hi: IntPolynomial  # B_{k+1}
    index: int


def _check_index(n: int) -> None:
    if n < 0:
        raise OutOfDomain(f"Stern index must be >= 0, got {n}")


def stern_pair(n: int) -> SternPair:
    """(B_n, B_{n+1}) by scanning the bits of n from the top."""
    _check_index(n)
    lo, hi = ZERO, ONE
    for bit in bin(n)[2:] if n else "":
        if bit == "0":
            lo, hi = lo.shift(), add(lo, hi)
        else:
            lo, hi = add(lo, hi), hi.shift()
    return SternPair(lo=lo, hi=hi, index=n)


def stern_poly(n: int) -> IntPolynomial:
    return stern_pair(n).lo


def stern_number(n: int) -> int:
    _check_index(n)
    lo, hi = 0, 1
    for bit in bin(n)[2:] if n else "":
        if bit == "0":
            hi = lo + hi
        else:
            lo = lo + hi
    return lo


def stern_degree(n: int) -> int:
    """e(n) = deg B_n, from the degree pair recursion alone."""
    _check_index(n)
    if n == 0:
        raise UndefinedDegree("B_0 = 0 has no degree")
    # start from (B_1, B_2) and skip the leading bit
    lo, hi = 0, 1
    for bit in bin(n)[3:]:
        if bit == "0":
            lo, hi = lo + 1, max(lo, hi)
        else:
            lo, hi = max(lo, hi), hi + 1
    return lo


def hyperbinary_poly(n: int) -> IntPolynomial:
    """Sum over hyperbinary representations of n of t^(number of digits 1)."""
    _check_index(n)
    memo: Dict[int, IntPolynomial] = {0: ONE}

    def h(k: int) -> IntPolynomial:
        if k in memo:
            return memo[k]
        if k % 2:
            value = h((k - 1) // 2).shift()
        else:
            value = add(h(k // 2), h((k - 2) // 2))
        memo[k] = value
        return value

    # fill bottom-up along the (at most two per level) reachable values
    levels: List[int] = []
    k = n
    while k > 0:
        levels.append(k)
        k //= 2
    for k in reversed(levels):
        for v in (k - 1, k):
            if v >= 0:
                h(v)
    return h(n)


def gf_prefix(N: int) -> List[IntPolynomial]:
    """(B_0, ..., B_N) from the product x * prod_j (1 + t x^(2^j) + x^(2^(j+1)))."""
    if N < 1:
        raise OutOfDomain(f"gf_prefix needs N >= 1, got {N}")
    # power series in x truncated at x^(N-1); the leading factor x shifts it to B_1..B_N
    series: List[IntPolynomial] = [ONE] + [ZERO] * (N - 1)
    step = 1
    while step <= N:
        double = 2 * step
        for i in range(N - 1, 0, -1):
            acc = series[i]
            if i >= step:
                acc = add(acc, series[i - step].shift())
            if i >= double:
                acc = add(acc, series[i - double])
            series[i] = acc
        step = double
    return [ZERO] + series


def stern_table(N: int) -> List[IntPolynomial]:
    """(B_0, ..., B_N) by the defining recurrence."""
    table: List[IntPolynomial] = [ZERO, ONE][: N + 1]
    for k in range(2, N + 1):
        half = k // 2
        table.append(table[half].shift() if k % 2 == 0 else add(table[half], table[half + 1]))
    return table


def binary_digits(n: int) -> Tuple[int, ...]:
    return tuple(int(b) for b in bin(n)[2:])
