import pytest

from app.core.errors import PreconditionViolated, UnknownIdentifier
from app.models.polynomial import IntPolynomial
from app.services import identities
from app.services.identities import (
    alpha_closed_form,
    c_difference,
    dkt_split,
    even_geometric,
    quadratic_form_f,
    quadratic_form_xy,
    run_sweep,
    v2_explicit,
    v3_explicit,
    verify_alpha,
    verify_beta_maxima,
    verify_c_machinery,
    verify_dkt,
    verify_h_machinery,
    verify_lemma1,
    verify_lemma1_random,
    verify_lemma2,
    verify_p_injectivity,
    verify_p_theorem,
    verify_s_theorem,
    verify_theorem3,
    verify_trivial_families,
    verify_V_explicit,
    verify_V_recurrence,
)
from app.services.stern_engine import stern_poly


def poly(*coefficients):
    return IntPolynomial(coefficients)


def test_lemma1():
    assert verify_lemma1(2, 5, 3).passed
    skipped = verify_lemma1(3, 0, 2)
    assert skipped.passed
    assert skipped.notes == ["second identity needs m >= 1; skipped"]
    with pytest.raises(PreconditionViolated):
        verify_lemma1(2, 1, 5)


def test_lemma1_sweeps():
    assert run_sweep("lemma1", {"a": [0, 1, 2, 3], "m": [0, 1, 2, 3, 4, 5]}).passed
    random_sweep = verify_lemma1_random(50, seed=3)
    assert random_sweep.passed
    assert random_sweep.cells == 50
    assert random_sweep.range == {"trials": "50", "seed": "3"}


def test_lemma2_and_dkt():
    assert run_sweep("lemma2", {"n": list(range(1, 12))}).passed
    assert dkt_split(11) == (3, 3)
    assert verify_dkt(6, 11).passed
    assert run_sweep("dkt", {"k": [1, 3, 5, 7, 9, 11]}).passed
    with pytest.raises(PreconditionViolated):
        verify_dkt(5, 4)
    with pytest.raises(PreconditionViolated):
        verify_dkt(2, 5)


def test_p_theorem():
    report = verify_p_theorem(2, 1)
    assert report.passed
    assert report.counterexample is None
    assert run_sweep("p-theorem", {"k": [2, 3, 4, 5], "n": [1, 2, 3, 4]}).passed
    with pytest.raises(PreconditionViolated):
        verify_p_theorem(1, 1)


def test_v_forms():
    assert v2_explicit(1) == poly(1, 2)
    assert v2_explicit(2) == stern_poly(41)
    assert v3_explicit(2) == stern_poly(85)
    assert v3_explicit(3) == stern_poly(421)
    assert verify_V_explicit(3, 5).notes == ["inner sum index read as i = 2..n-1"]
    assert run_sweep("v-explicit", {"k": [2, 3], "n": list(range(1, 9))}).passed
    assert verify_V_recurrence(3, 2).passed
    with pytest.raises(PreconditionViolated):
        verify_V_explicit(4, 2)


def test_c_machinery():
    assert stern_poly(845) == poly(1, 6, 16, 24, 20, 8)
    assert [c_difference(j, 3) for j in range(6)] == [0, 2, 8, 10, 6, 0]
    assert verify_c_machinery(4, 3).passed
    with pytest.raises(PreconditionViolated):
        verify_c_machinery(3, 3)


def test_p_injectivity():
    report = verify_p_injectivity(6, 6)
    assert report.passed
    assert "30 distinct values" in report.notes


def test_s0_theorem():
    assert verify_s_theorem(0, 1).passed
    assert verify_s_theorem(0, 2).passed
    assert identities.s0_explicit(2) == poly(1, 5, 9, 7, 3, 1)
    assert identities.s0_explicit(3) == poly(1, 5, 11, 13, 11, 7, 3, 1)
    assert identities.s0_explicit(5).coefficients[2:5] == (11, 15, 19)
    assert identities.s0_explicit(3, printed=True) != poly(1, 5, 11, 13, 11, 7, 3, 1)
    assert verify_s_theorem(0, 3).passed
    assert run_sweep("s-theorem", {"i": [0], "n": list(range(1, 8))}).passed


def test_alpha():
    assert alpha_closed_form(6) == stern_poly(21) == poly(1, 4, 3)
    assert run_sweep("alpha", {"n": list(range(2, 16))}).passed


def test_quadratic_forms_give_b19():
    x, y = stern_poly(1), stern_poly(2)
    assert quadratic_form_xy(x, y) == stern_poly(19)
    assert quadratic_form_f(x, stern_poly(5)) == stern_poly(19)
    for n in range(0, 3):
        assert verify_h_machinery(n).passed


def test_theorem3_small():
    assert verify_theorem3(0).passed
    assert verify_theorem3(1).passed


def test_trivial_families_and_beta():
    assert verify_trivial_families(4, 3).passed
    assert verify_trivial_families(2, 2).notes == ["r = 2 needs m >= 3; congruence check skipped"]
    assert run_sweep("beta-maxima", {"n": list(range(2, 13))}).passed


def test_even_geometric():
    assert even_geometric(0) == poly()
    assert even_geometric(3) == poly(1, 0, 1, 0, 1)


def test_failures_carry_counterexample(monkeypatch):
    monkeypatch.setattr(identities, "v2_explicit", lambda n: poly(1))
    report = verify_V_explicit(2, 3)
    assert not report.passed
    assert report.counterexample.detail == "explicit expansion"
    assert report.counterexample.rhs == ["1"]
    sweep = run_sweep("v-explicit", {"k": [2], "n": [2, 3]})
    assert not sweep.passed
    assert len(sweep.failures) == 2


def test_unknown_identity():
    with pytest.raises(UnknownIdentifier):
        run_sweep("lemma9")


def test_lower_bounds_check_per_k_counts(monkeypatch):
    monkeypatch.setattr(identities, "pi", lambda spec, x: 10**6)
    assert identities.verify_lower_bounds(20).passed

    monkeypatch.setattr(identities, "p_index_limit", lambda k, x: 0)
    report = identities.verify_lower_bounds(20)
    assert not report.passed
    assert report.counterexample.detail.startswith("per-k closed-form counts")
