"""Closed-form norm unit and property tests."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from littlewood.forms import (
    InvalidExponent,
    NonFiniteInput,
    NormBranch,
    boundary_profile,
    coeff_lp_norm,
    evaluate_real,
    lp_norm_batch,
    make_form,
    norm_complex_batch,
    norm_complex_real_coeffs,
    norm_real,
    norm_real_batch,
)

coeff = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
forms = st.builds(make_form, coeff, coeff, coeff, coeff)


# --- fixed values -----------------------------------------------------------


def test_real_norm_fixture_tie():
    res = norm_real(make_form(1.0, 1.0, 1.0, -1.0))
    assert res.value == 2.0
    assert res.branch is NormBranch.VERTEX_PLUS


def test_real_norm_fixture_minus_branch():
    res = norm_real(make_form(0.3, -0.2, 0.5, 0.1))
    assert res.value == pytest.approx(0.9, abs=1e-15)
    assert res.branch is NormBranch.VERTEX_MINUS


def test_complex_norm_interior_fixture():
    res = norm_complex_real_coeffs(make_form(1.0, 1.0, 1.0, -1.0))
    assert res.branch is NormBranch.INTERIOR_CRITICAL
    assert res.critical_cos == 0.0
    assert res.value == 2.0 * math.sqrt(2.0)


def test_complex_norm_vertex_fixture():
    res = norm_complex_real_coeffs(make_form(1.0, 2.0, 3.0, 4.0))
    assert res.value == 10.0
    assert res.branch is NormBranch.VERTEX_PLUS
    assert res.critical_cos is None


def test_evaluate_real_matches_expansion():
    T = make_form(1.0, -2.0, 3.0, 0.5)
    assert evaluate_real(T, (2.0, -1.0), (0.5, 3.0)) == pytest.approx(
        1.0 * 2.0 * 0.5 + (-2.0) * (-1.0) * 0.5 + 3.0 * 2.0 * 3.0 + 0.5 * (-1.0) * 3.0
    )


def test_lp_norm_values():
    T = make_form(1.0, 1.0, 1.0, -1.0)
    assert coeff_lp_norm(T, 1.0) == 4.0
    assert coeff_lp_norm(T, 2.0) == 2.0
    assert coeff_lp_norm(T, 4.0 / 3.0) == pytest.approx(4.0 ** 0.75, rel=1e-15)


# --- input validation -------------------------------------------------------


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), float("-inf")])
def test_make_form_rejects_nonfinite(bad):
    with pytest.raises(NonFiniteInput):
        make_form(1.0, bad, 0.0, 0.0)


def test_boundary_profile_rejects_nonfinite_t():
    with pytest.raises(NonFiniteInput):
        boundary_profile(make_form(1.0, 0.0, 0.0, 0.0), float("nan"))


@pytest.mark.parametrize("p", [0.5, 0.0, -1.0])
def test_lp_norm_rejects_small_exponent(p):
    with pytest.raises(InvalidExponent):
        coeff_lp_norm(make_form(1.0, 0.0, 0.0, 0.0), p)
    with pytest.raises(InvalidExponent):
        lp_norm_batch(np.ones((2, 4)), p)


# --- invariants -------------------------------------------------------------


@given(forms, st.floats(min_value=0.0, max_value=8.0, allow_nan=False))
def test_norms_scale_equivariant(T, lam):
    for norm in (norm_real, norm_complex_real_coeffs):
        base = norm(T).value
        scaled = norm(T.scale(lam)).value
        assert scaled == pytest.approx(lam * base, rel=1e-12, abs=1e-12)


@given(forms)
def test_norms_invariant_under_row_and_column_flips(T):
    a, b, c, d = T.as_tuple()
    flips = [
        make_form(-a, b, -c, d),  # first row of the 2x2 layout
        make_form(a, -b, c, -d),  # second row
        make_form(-a, -b, c, d),  # first column
        make_form(a, b, -c, -d),  # second column
    ]
    for norm in (norm_real, norm_complex_real_coeffs):
        ref = norm(T).value
        for F in flips:
            assert norm(F).value == pytest.approx(ref, rel=1e-12, abs=1e-12)


@given(forms)
def test_complex_norm_dominates_real(T):
    assert norm_complex_real_coeffs(T).value >= norm_real(T).value


@given(forms)
def test_vertex_identity_exact(T):
    plus = abs(T.a11 + T.a21) + abs(T.a12 + T.a22)
    minus = abs(T.a11 - T.a21) + abs(T.a12 - T.a22)
    assert boundary_profile(T, 0.0).f_of_t == plus
    assert boundary_profile(T, math.pi).f_of_t == minus


@given(forms, st.floats(min_value=0.0, max_value=2.0 * math.pi, allow_nan=False))
def test_complex_norm_dominates_profile(T, t):
    assert norm_complex_real_coeffs(T).value >= boundary_profile(T, t).f_of_t - 1e-12


@given(forms)
def test_real_norm_attained_at_a_sign_vertex(T):
    best = max(
        abs(evaluate_real(T, (float(x1), float(x2)), (float(y1), float(y2))))
        for x1 in (-1, 1)
        for x2 in (-1, 1)
        for y1 in (-1, 1)
        for y2 in (-1, 1)
    )
    assert norm_real(T).value == pytest.approx(best, rel=1e-12, abs=1e-12)


# --- scalar / batch agreement ----------------------------------------------


@settings(max_examples=30)
@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_batch_matches_scalar(seed):
    rng = np.random.default_rng(seed)
    rows = rng.uniform(-5.0, 5.0, size=(64, 4))
    real = norm_real_batch(rows)
    cplx = norm_complex_batch(rows)
    lp = lp_norm_batch(rows, 4.0 / 3.0)
    for i, row in enumerate(rows):
        T = make_form(*row)
        assert real[i] == norm_real(T).value
        assert cplx[i] == pytest.approx(norm_complex_real_coeffs(T).value, rel=1e-15)
        assert lp[i] == pytest.approx(coeff_lp_norm(T, 4.0 / 3.0), rel=1e-14)
