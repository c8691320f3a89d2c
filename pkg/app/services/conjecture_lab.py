from __future__ import annotations

import logging
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from app.core.errors import NotDivisible, PreconditionViolated, UnknownIdentifier
from app.models.polynomial import IntPolynomial, add, divide_exact, geometric, reverse
from app.models.report import ConjectureCell, ConjectureReport
from app.services.families import h_index, p_index, s_index
from app.services.identities import even_geometric
from app.services.parallel import ordered_map
from app.services.stern_engine import stern_poly
from app.utils.sturm import count_real_roots, eisenstein_irreducible, is_increasing

logger = logging.getLogger(__name__)

IRREDUCIBLE = "irreducible"
INCONCLUSIVE = "inconclusive"

T_PLUS_1 = IntPolynomial((1, 1))

Grid = Dict[str, List[int]]


def eisenstein_verdict(p: IntPolynomial, q: int = 2) -> str:
    """Eisenstein at q on p or on its reversal."""
    if p.degree < 1:
        return INCONCLUSIVE
    if eisenstein_irreducible(p, q) or eisenstein_irreducible(reverse(p), q):
        return IRREDUCIBLE
    return INCONCLUSIVE


def expected_p_roots(k: int, n: int) -> Optional[int]:
    """Root count claimed for B_{p_{k,n}}, or None where nothing is claimed."""
    if k == 2:
        return 1
    if k % 2 == 0 and 4 <= k <= 32:
        if n == 2:
            return 2
        return 1 if n >= 3 else None
    if k == 34 and n >= 6:
        return 1
    return None


# ---------------------------------------------------------------------------
# per-cell work (module level for the worker pool)


def _p_roots(k: int, n: int) -> ConjectureCell:
    roots = count_real_roots(stern_poly(p_index(k, n)))
    want = expected_p_roots(k, n)
    return ConjectureCell(params={"k": k, "n": n}, observation=roots, consistent=None if want is None else roots == want)


def _p_monotone(k: int, n: int) -> ConjectureCell:
    up = is_increasing(stern_poly(p_index(k, n)))
    claimed = k % 2 == 0 and (expected_p_roots(k, n) == 1)
    return ConjectureCell(params={"k": k, "n": n}, observation=up, consistent=up if claimed else None)


def _p_eisenstein(k: int, n: int) -> ConjectureCell:
    verdict = eisenstein_verdict(stern_poly(p_index(k, n)))
    reducible_claim = k >= 3 and n == k - 1
    if reducible_claim:
        consistent = False if verdict == IRREDUCIBLE else None
    else:
        consistent = True if verdict == IRREDUCIBLE else None
    return ConjectureCell(params={"k": k, "n": n}, observation=verdict, consistent=consistent)


def reducibility_factors(k: int) -> Tuple[IntPolynomial, IntPolynomial]:
    """(1 + 2t(t^(k-2)-1)/(t-1), V_{2,k-2} + 2t^(k-2)(1+t))."""
    first = add(IntPolynomial((1,)), geometric(k - 2).shift() * 2)
    second = add(stern_poly(p_index(2, k - 2)), T_PLUS_1.shift(k - 2) * 2)
    return first, second


def _reducibility(k: int) -> ConjectureCell:
    idx = p_index(k, k - 1)
    first, second = reducibility_factors(k)
    product = first * second
    holds = product == stern_poly(idx)
    observation = {
        "index": idx,
        "identity_holds": holds,
        "product_at_2": product(2),
        "factors": [first.pretty(), second.pretty()],
        "eisenstein": [eisenstein_verdict(first), eisenstein_verdict(second)],
    }
    return ConjectureCell(params={"k": k}, observation=observation, consistent=holds)


def _s_roots(i: int, n: int) -> ConjectureCell:
    roots = count_real_roots(stern_poly(s_index(i, n)))
    if i == 1:
        want = 3 if n >= 3 else None
    else:
        want = 1 if n >= 2 else None
    return ConjectureCell(params={"i": i, "n": n}, observation=roots, consistent=None if want is None else roots == want)


def _s_quotient_eisenstein(i: int, n: int) -> ConjectureCell:
    try:
        quotient = divide_exact(stern_poly(s_index(i, n)), T_PLUS_1)
    except NotDivisible:
        return ConjectureCell(params={"i": i, "n": n}, observation="not divisible by t+1", consistent=False)
    verdict = eisenstein_verdict(quotient)
    return ConjectureCell(params={"i": i, "n": n}, observation=verdict, consistent=True if verdict == IRREDUCIBLE else None)


def s1_even_factors(n: int) -> Tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
    """Three-factor form of B_{s_{1,2n}}."""
    if n < 1:
        raise PreconditionViolated(f"s_1 factorization needs n >= 1, got {n}")
    one = IntPolynomial((1,))
    a = add(add(one, geometric(2 * n).shift() * 3), IntPolynomial.monomial(2 * n, -2))
    b = add(
        add(add(one, geometric(2 * n - 1).shift() * 3), even_geometric(n - 1).shift(3) * -2),
        IntPolynomial.monomial(2 * n),
    )
    return T_PLUS_1, a, b


def s1_odd_factors(n: int) -> Tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
    """Three-factor form claimed for B_{s_{1,2n+1}}."""
    if n < 1:
        raise PreconditionViolated(f"s_1 factorization needs n >= 1, got {n}")
    one = IntPolynomial((1,))
    a = add(
        add(add(one, IntPolynomial.monomial(2, 2)), geometric(2 * (n + 1)).shift()),
        IntPolynomial((2, 3)).shift(2 * n + 1) * -1,
    )
    b = add(
        add(add(one, geometric(2 * n - 1).shift() * 2), even_geometric(n - 1).shift(2) * -1),
        IntPolynomial.monomial(2 * n),
    )
    return T_PLUS_1, a, b


def _s1_factorization(n: int) -> ConjectureCell:
    even_idx, odd_idx = s_index(1, 2 * n), s_index(1, 2 * n + 1)
    observation: Dict[str, Any] = {"even_index": even_idx, "odd_index": odd_idx}
    verdicts: List[str] = []
    for label, build, idx in (("even", s1_even_factors, even_idx), ("odd", s1_odd_factors, odd_idx)):
        try:
            f0, f1, f2 = build(n)
        except NotDivisible as e:
            observation[f"{label}_holds"] = False
            observation[f"{label}_detail"] = str(e)
            continue
        product = f0 * f1 * f2
        observation[f"{label}_holds"] = product == stern_poly(idx)
        observation[f"{label}_product_at_2"] = product(2)
        if label == "even":
            verdicts = [eisenstein_verdict(f1), eisenstein_verdict(f2)]
            observation["even_factor_eisenstein"] = verdicts
    consistent: Optional[bool] = None
    if observation.get("even_holds") and verdicts and all(v == IRREDUCIBLE for v in verdicts):
        consistent = True
    return ConjectureCell(params={"n": n}, observation=observation, consistent=consistent)


def _s0_monotone(n: int) -> ConjectureCell:
    up = is_increasing(stern_poly(s_index(0, n)))
    return ConjectureCell(params={"n": n}, observation=up, consistent=up)


def _h_roots(n: int) -> ConjectureCell:
    roots = count_real_roots(stern_poly(h_index(n)))
    return ConjectureCell(params={"n": n}, observation=roots, consistent=roots == 0)


CELLS: Dict[str, Callable[..., ConjectureCell]] = {
    "p-roots": _p_roots,
    "p-monotone": _p_monotone,
    "p-eisenstein": _p_eisenstein,
    "reducibility": _reducibility,
    "s-roots": _s_roots,
    "s-quotient": _s_quotient_eisenstein,
    "s1-factorization": _s1_factorization,
    "s0-monotone": _s0_monotone,
    "h-roots": _h_roots,
}


def _run_cell(job: Tuple[str, Dict[str, int]]) -> ConjectureCell:
    name, params = job
    return CELLS[name](**params)


def _grid(cell: str, params: Iterable[Dict[str, int]], workers: Optional[int]) -> List[ConjectureCell]:
    return ordered_map(_run_cell, [(cell, p) for p in params], workers=workers)


def _describe(**ranges: Iterable[int]) -> Dict[str, str]:
    out = {}
    for name, values in ranges.items():
        values = list(values)
        if values:
            out[name] = f"{min(values)}..{max(values)}"
    return out


def _report(conjecture: str, cells: List[ConjectureCell], grid: Dict[str, str], notes: Optional[List[str]] = None) -> ConjectureReport:
    report = ConjectureReport(conjecture=conjecture, grid=grid, cells=cells, notes=notes or [])
    bad = report.inconsistent_cells
    if bad:
        logger.warning("%s: %d of %d cells inconsistent", conjecture, len(bad), len(cells))
    else:
        logger.info("%s: %d cells, none inconsistent", conjecture, len(cells))
    return report


# ---------------------------------------------------------------------------
# public grids


def _one_root_threshold(row: List[Tuple[int, int]]) -> Optional[int]:
    """Smallest n of the (n, count) row after which every count is 1."""
    threshold = None
    for n, count in reversed(row):
        if count != 1:
            break
        threshold = n
    return threshold


def roots_grid(k_range: Iterable[int], n_range: Iterable[int], workers: Optional[int] = None) -> ConjectureReport:
    ks, ns = list(k_range), list(n_range)
    if any(k < 2 for k in ks) or any(n < 1 for n in ns):
        raise PreconditionViolated("roots grid needs k >= 2 and n >= 1")
    cells = _grid("p-roots", ({"k": k, "n": n} for k in ks for n in ns), workers)
    notes = []
    for k in ks:
        row = sorted((c.params["n"], c.observation) for c in cells if c.params["k"] == k)
        if k % 2:
            notes.append(f"k={k}: max N_k(n) = {max(count for _, count in row)} over the grid")
            continue
        threshold = _one_root_threshold(row)
        if threshold is None:
            notes.append(f"k={k}: N_k({row[-1][0]}) = {row[-1][1]}, no one-root threshold in the grid")
        else:
            notes.append(f"k={k}: N_k(n) = 1 for every grid n >= {threshold}")
    return _report("C1.2" if all(k % 2 for k in ks) else "C1.1", cells, _describe(k=ks, n=ns), notes)


def odd_roots_grid(k_range: Iterable[int], n_range: Iterable[int], workers: Optional[int] = None) -> ConjectureReport:
    odd = [k for k in k_range if k % 2]
    if not odd:
        raise PreconditionViolated("odd-k roots grid needs at least one odd k")
    return roots_grid(odd, n_range, workers)


def monotone_grid(k_range: Iterable[int], n_range: Iterable[int], workers: Optional[int] = None) -> ConjectureReport:
    ks, ns = list(k_range), list(n_range)
    if any(k < 2 for k in ks) or any(n < 1 for n in ns):
        raise PreconditionViolated("monotone grid needs k >= 2 and n >= 1")
    cells = _grid("p-monotone", ({"k": k, "n": n} for k in ks for n in ns), workers)
    return _report("C1.1", cells, _describe(k=ks, n=ns), ["observation: B_{p_{k,n}} strictly increasing on R"])


def eisenstein_grid(k_range: Iterable[int], n_range: Iterable[int], workers: Optional[int] = None) -> ConjectureReport:
    ks, ns = list(k_range), list(n_range)
    if any(k < 2 for k in ks) or any(n < 1 for n in ns):
        raise PreconditionViolated("Eisenstein grid needs k >= 2 and n >= 1")
    cells = _grid("p-eisenstein", ({"k": k, "n": n} for k in ks for n in ns), workers)
    return _report("C1.3", cells, _describe(k=ks, n=ns), ["inconclusive cells are not evidence of reducibility"])


def reducibility_identity(k: int) -> ConjectureReport:
    if k < 3:
        raise PreconditionViolated(f"reducibility identity needs k >= 3, got {k}")
    cell = _reducibility(k)
    notes = ["B_{2,k-2} read as V_{2,k-2} = B_{p_{2,k-2}}"]
    if cell.observation["identity_holds"] and cell.observation["product_at_2"] != cell.observation["index"]:
        notes.append("product evaluates to a different index at t = 2")
    return _report("C1.3", [cell], {"k": str(k)}, notes)


def reducibility_grid(k_range: Iterable[int], workers: Optional[int] = None) -> ConjectureReport:
    ks = list(k_range)
    if any(k < 3 for k in ks):
        raise PreconditionViolated("reducibility identity needs k >= 3")
    cells = _grid("reducibility", ({"k": k} for k in ks), workers)
    return _report("C1.3", cells, _describe(k=ks), ["B_{2,k-2} read as V_{2,k-2} = B_{p_{2,k-2}}"])


def s_roots_grid(i_range: Iterable[int], n_range: Iterable[int], workers: Optional[int] = None) -> ConjectureReport:
    is_, ns = list(i_range), list(n_range)
    if any(i not in (0, 1, 2, 3) for i in is_) or any(n < 1 for n in ns):
        raise PreconditionViolated("s grid needs i in 0..3 and n >= 1")
    cells = _grid("s-roots", ({"i": i, "n": n} for i in is_ for n in ns), workers)
    conjecture = "C2.3" if is_ == [1] else "C2.1"
    return _report(conjecture, cells, _describe(i=is_, n=ns))


def s_quotient_grid(i_range: Iterable[int], n_range: Iterable[int], workers: Optional[int] = None) -> ConjectureReport:
    is_, ns = list(i_range), list(n_range)
    if any(i not in (0, 2, 3) for i in is_) or any(n < 1 for n in ns):
        raise PreconditionViolated("s quotient grid needs i in {0, 2, 3} and n >= 1")
    cells = _grid("s-quotient", ({"i": i, "n": n} for i in is_ for n in ns), workers)
    return _report("C2.2", cells, _describe(i=is_, n=ns), ["Eisenstein at 2 on B_{s_{i,n}}/(t+1) or its reversal"])


def s1_factorizations(n: int) -> ConjectureReport:
    if n < 1:
        raise PreconditionViolated(f"s_1 factorization needs n >= 1, got {n}")
    cell = _s1_factorization(n)
    return _report("C2.4", [cell], {"n": str(n)})


def s1_factorization_grid(n_range: Iterable[int], workers: Optional[int] = None) -> ConjectureReport:
    ns = list(n_range)
    if any(n < 1 for n in ns):
        raise PreconditionViolated("s_1 factorization needs n >= 1")
    cells = _grid("s1-factorization", ({"n": n} for n in ns), workers)
    notes = []
    if any(not c.observation.get("odd_holds", False) for c in cells):
        notes.append("odd-index three-factor form does not reproduce B_{s_{1,2n+1}}")
    return _report("C2.4", cells, _describe(n=ns), notes)


def s0_monotone_grid(n_range: Iterable[int], workers: Optional[int] = None) -> ConjectureReport:
    ns = list(n_range)
    if any(n < 1 for n in ns):
        raise PreconditionViolated("s_0 monotone grid needs n >= 1")
    return _report("C2.5", _grid("s0-monotone", ({"n": n} for n in ns), workers), _describe(n=ns))


def h_no_real_roots(n_max: int, workers: Optional[int] = None) -> ConjectureReport:
    if n_max < 0:
        raise PreconditionViolated(f"n_max must be >= 0, got {n_max}")
    cells = _grid("h-roots", ({"n": n} for n in range(n_max + 1)), workers)
    return _report("C3", cells, {"n": f"0..{n_max}"})


def values_at_minus_one(bound: int) -> List[int]:
    """B_n(-1) for n = 0..bound from the integer recurrence."""
    v = [0, 1]
    for k in range(2, bound + 1):
        half = k // 2
        v.append(-v[half] if k % 2 == 0 else v[half] + v[half + 1])
    return v


def divisibility_by_t_plus_1(bound: int) -> ConjectureReport:
    if bound < 3:
        raise PreconditionViolated(f"bound must be >= 3, got {bound}")
    values = values_at_minus_one(bound)
    bad = [n for n in range(1, bound + 1) if (values[n] == 0) != (n % 3 == 0)]
    summary = ConjectureCell(params={"bound": bound}, observation={"checked": bound, "counterexamples": len(bad)}, consistent=not bad)
    cells = [summary] + [
        ConjectureCell(params={"n": n}, observation={"value_at_minus_one": values[n]}, consistent=False) for n in bad
    ]
    return _report("minus-one", cells, {"n": f"1..{bound}"})


# ---------------------------------------------------------------------------
# registry for the CLI


def _range(grid: Grid, name: str, default: Iterable[int]) -> List[int]:
    return list(grid.get(name, default))


def _single(grid: Grid, name: str, default: int) -> int:
    values = grid.get(name)
    return values[-1] if values else default


CONJECTURES: Dict[str, Callable[[Grid, Optional[int]], ConjectureReport]] = {
    "C1.1": lambda g, w: roots_grid(_range(g, "k", range(2, 11, 2)), _range(g, "n", range(1, 21)), w),
    "C1.1-monotone": lambda g, w: monotone_grid(_range(g, "k", range(2, 11, 2)), _range(g, "n", range(1, 21)), w),
    "C1.2": lambda g, w: odd_roots_grid(_range(g, "k", range(3, 10, 2)), _range(g, "n", range(1, 21)), w),
    "C1.3": lambda g, w: eisenstein_grid(_range(g, "k", range(2, 9)), _range(g, "n", range(1, 11)), w),
    "C1.3-identity": lambda g, w: reducibility_grid(_range(g, "k", range(3, 11)), w),
    "C2.1": lambda g, w: s_roots_grid(_range(g, "i", (0, 2, 3)), _range(g, "n", range(2, 13)), w),
    "C2.2": lambda g, w: s_quotient_grid(_range(g, "i", (0, 2, 3)), _range(g, "n", range(1, 13)), w),
    "C2.3": lambda g, w: s_roots_grid([1], _range(g, "n", range(3, 13)), w),
    "C2.4": lambda g, w: s1_factorization_grid(_range(g, "n", range(1, 13)), w),
    "C2.5": lambda g, w: s0_monotone_grid(_range(g, "n", range(1, 21)), w),
    "C3": lambda g, w: h_no_real_roots(_single(g, "n", 6), w),
    "minus-one": lambda g, w: divisibility_by_t_plus_1(_single(g, "bound", 10**4)),
}


def run_conjecture(conjecture: str, grid: Optional[Grid] = None, workers: Optional[int] = None) -> ConjectureReport:
    if conjecture not in CONJECTURES:
        raise UnknownIdentifier(f"unknown conjecture '{conjecture}', expected one of {', '.join(CONJECTURES)}")
    return CONJECTURES[conjecture](grid or {}, workers)
