import pytest

from app.core.errors import PreconditionViolated, UnknownIdentifier
from app.models.polynomial import IntPolynomial
from app.services.conjecture_lab import (
    INCONCLUSIVE,
    IRREDUCIBLE,
    divisibility_by_t_plus_1,
    eisenstein_verdict,
    expected_p_roots,
    h_no_real_roots,
    monotone_grid,
    odd_roots_grid,
    reducibility_factors,
    reducibility_identity,
    roots_grid,
    run_conjecture,
    s0_monotone_grid,
    s1_even_factors,
    s1_factorizations,
    s_quotient_grid,
    values_at_minus_one,
)
from app.services.families import p_index
from app.services.stern_engine import stern_poly


def poly(*coefficients):
    return IntPolynomial(coefficients)


def test_eisenstein_verdict():
    assert eisenstein_verdict(poly(1, 2, 2)) == IRREDUCIBLE
    assert eisenstein_verdict(poly(1, 3, 1)) == INCONCLUSIVE
    assert eisenstein_verdict(poly(5)) == INCONCLUSIVE


def test_expected_p_roots():
    assert expected_p_roots(2, 7) == 1
    assert expected_p_roots(4, 2) == 2
    assert expected_p_roots(6, 3) == 1
    assert expected_p_roots(6, 1) is None
    assert expected_p_roots(3, 4) is None
    assert expected_p_roots(34, 6) == 1


def test_roots_grid():
    report = roots_grid([2, 4], [1, 2])
    assert report.conjecture == "C1.1"
    by_params = {(c.params["k"], c.params["n"]): c for c in report.cells}
    assert by_params[(2, 1)].observation == 1
    assert by_params[(4, 2)].observation == 2  # B_173
    assert by_params[(4, 2)].consistent is True
    assert report.grid == {"k": "2..4", "n": "1..2"}
    assert report.notes == [
        "k=2: N_k(n) = 1 for every grid n >= 1",
        "k=4: N_k(2) = 2, no one-root threshold in the grid",
    ]


def test_roots_grid_threshold_note():
    report = roots_grid([4], [2, 3])
    assert [c.observation for c in report.cells] == [2, 1]  # B_173, B_845
    assert report.notes == ["k=4: N_k(n) = 1 for every grid n >= 3"]


def test_increasing_odd_degree_means_one_root():
    ks, ns = [2, 4], [1, 2, 3]
    roots = {(c.params["k"], c.params["n"]): c.observation for c in roots_grid(ks, ns).cells}
    increasing = [(c.params["k"], c.params["n"]) for c in monotone_grid(ks, ns).cells if c.observation]
    assert (2, 1) in increasing
    for k, n in increasing:
        b = stern_poly(p_index(k, n))
        assert b.leading_coefficient > 0
        assert b.degree % 2 == 1
        assert roots[(k, n)] == 1


def test_odd_roots_grid():
    report = odd_roots_grid([2, 3], [2])
    assert report.conjecture == "C1.2"
    [cell] = report.cells
    assert cell.observation == 3  # (1+2t)(1+4t+2t^2)
    assert cell.consistent is None
    assert report.notes == ["k=3: max N_k(n) = 3 over the grid"]
    with pytest.raises(PreconditionViolated):
        odd_roots_grid([2, 4], [1])


def test_monotone_grids():
    [cell] = monotone_grid([2], [1]).cells
    assert cell.observation is True
    assert cell.consistent is True
    [cell] = s0_monotone_grid([1]).cells  # (t+1)^3
    assert cell.consistent is True


def test_reducibility_identity_k3():
    first, second = reducibility_factors(3)
    assert first == poly(1, 2)
    assert second == poly(1, 4, 2)
    report = reducibility_identity(3)
    [cell] = report.cells
    assert cell.consistent is True
    assert cell.observation["index"] == 85
    assert cell.observation["product_at_2"] == 85
    assert cell.observation["eisenstein"] == [IRREDUCIBLE, IRREDUCIBLE]
    with pytest.raises(PreconditionViolated):
        reducibility_identity(2)


def test_s1_factorizations():
    f0, f1, f2 = s1_even_factors(1)
    assert f0 * f1 * f2 == stern_poly(363)
    [cell] = s1_factorizations(1).cells
    assert cell.observation["even_holds"] is True
    assert cell.observation["odd_holds"] is False
    assert cell.observation["odd_product_at_2"] == -675
    assert cell.observation["odd_index"] == 1755


def test_h_roots():
    report = h_no_real_roots(1)
    assert [c.observation for c in report.cells] == [0, 0]
    assert not report.inconsistent_cells


def test_minus_one():
    assert values_at_minus_one(9) == [0, 1, -1, 0, 1, -1, 0, 1, -1, 0]
    report = divisibility_by_t_plus_1(300)
    assert len(report.cells) == 1
    assert report.cells[0].consistent is True
    with pytest.raises(PreconditionViolated):
        divisibility_by_t_plus_1(2)


def test_run_conjecture():
    report = run_conjecture("minus-one", {"bound": [50]})
    assert report.conjecture == "minus-one"
    assert report.grid == {"n": "1..50"}
    assert run_conjecture("C1.1", {"k": [2], "n": [1, 2, 3]}).cells[0].consistent is True
    with pytest.raises(UnknownIdentifier):
        run_conjecture("C9")
    with pytest.raises(PreconditionViolated):
        s_quotient_grid([1], [1])
