import math

import numpy as np
import pytest

from magicbch import (
    ConvergenceError,
    DomainError,
    OracleConfig,
    ShapeError,
    bch_trunc3,
    frobenius_norm,
    mat_exp_taylor,
    mat_log_near_identity,
    so4_from_coeffs,
)


def planar_rotation(theta):
    m = np.eye(4)
    m[0, 0] = m[1, 1] = math.cos(theta)
    m[0, 1] = math.sin(theta)
    m[1, 0] = -math.sin(theta)
    return m


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(tol=0.0)
    with pytest.raises(ValueError):
        OracleConfig(max_terms=4)
    with pytest.raises(ValueError):
        OracleConfig(max_sqrt_steps=0)


def test_exp_of_zero():
    np.testing.assert_array_equal(mat_exp_taylor(np.zeros((4, 4))), np.eye(4))


def test_exp_of_nilpotent():
    n = np.zeros((2, 2))
    n[0, 1] = 0.25
    np.testing.assert_allclose(mat_exp_taylor(n), np.eye(2) + n, atol=1e-16)


def test_exp_of_plane_generator_is_planar_rotation():
    theta = 0.9
    a = so4_from_coeffs([theta, 0.0, 0.0, 0.0, 0.0, 0.0])
    np.testing.assert_allclose(mat_exp_taylor(a), planar_rotation(theta), atol=1e-14)


def test_exp_handles_large_norms():
    # scaling and squaring keeps the series in its convergent regime
    theta = 7.0
    a = so4_from_coeffs([theta, 0.0, 0.0, 0.0, 0.0, 0.0])
    assert frobenius_norm(a) >= 9.0
    np.testing.assert_allclose(mat_exp_taylor(a), planar_rotation(theta), atol=1e-13)


def test_exp_additivity_on_commuting_inputs():
    rng = np.random.default_rng(21)
    for _ in range(100):
        a = so4_from_coeffs([rng.uniform(-1, 1), 0, 0, 0, 0, 0])
        b = so4_from_coeffs([rng.uniform(-1, 1), 0, 0, 0, 0, rng.uniform(-1, 1)])
        assert frobenius_norm(a @ b - b @ a) == 0.0
        err = frobenius_norm(mat_exp_taylor(a) @ mat_exp_taylor(b) - mat_exp_taylor(a + b))
        assert err < 1e-13


def test_exp_convergence_error_when_budget_too_small():
    cfg = OracleConfig(tol=1e-30, max_terms=8)
    with pytest.raises(ConvergenceError):
        mat_exp_taylor(0.49 * np.eye(2), cfg)


def test_exp_rejects_unsupported_shapes():
    with pytest.raises(ShapeError):
        mat_exp_taylor(np.zeros((3, 3)))
    with pytest.raises(ShapeError):
        mat_exp_taylor(np.zeros(4))


def test_log_of_identity():
    np.testing.assert_array_equal(mat_log_near_identity(np.eye(4)), np.zeros((4, 4)))


def test_log_of_planar_rotation():
    got = mat_log_near_identity(planar_rotation(0.3))
    np.testing.assert_allclose(got, so4_from_coeffs([0.3, 0, 0, 0, 0, 0]), atol=1e-13)


def test_log_exp_round_trip():
    rng = np.random.default_rng(22)
    worst = 0.0
    for _ in range(300):
        a = so4_from_coeffs(rng.uniform(-0.28, 0.28, size=6))
        assert frobenius_norm(a) < 1.0
        worst = max(worst, frobenius_norm(mat_log_near_identity(mat_exp_taylor(a)) - a))
    assert worst < 1e-12


def test_log_rejects_rotation_through_pi():
    with pytest.raises(DomainError):
        mat_log_near_identity(planar_rotation(math.pi))


def test_log_rejects_singular_input():
    with pytest.raises(DomainError):
        mat_log_near_identity(np.diag([1.0, 1.0, 1.0, 0.0]))


def test_bch_trunc3_b_zero():
    a = so4_from_coeffs([0.3, -0.1, 0.2, 0.0, 0.5, -0.4])
    np.testing.assert_array_equal(bch_trunc3(a, np.zeros((4, 4))), a)


def test_bch_trunc3_commuting_inputs_add():
    a = so4_from_coeffs([0.4, 0, 0, 0, 0, 0])
    b = so4_from_coeffs([0.0, 0, 0, 0, 0, 0.7])
    np.testing.assert_allclose(bch_trunc3(a, b), a + b, atol=1e-16)


def test_bch_trunc3_term_scaling():
    # the four terms are homogeneous of degree 1, 2, 3, 3; scaling the
    # inputs must reproduce the polynomial term by term
    rng = np.random.default_rng(23)
    a = so4_from_coeffs(rng.uniform(-0.5, 0.5, size=6))
    b = so4_from_coeffs(rng.uniform(-0.5, 0.5, size=6))
    c = a @ b - b @ a
    linear = a + b
    quadratic = 0.5 * c
    cubic = ((c @ b - b @ c) + (a @ c - c @ a)) / 12.0
    for eps in (0.1, 0.05, 0.025):
        expected = eps * linear + eps**2 * quadratic + eps**3 * cubic
        np.testing.assert_allclose(bch_trunc3(eps * a, eps * b), expected, atol=1e-15)


def test_bch_trunc3_shape_mismatch():
    with pytest.raises(ShapeError):
        bch_trunc3(np.zeros((2, 2)), np.zeros((4, 4)))
