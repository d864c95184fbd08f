import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtomo import (DeformationParams, OperatorKind, algebra_residual, build_ladder,
                   build_momentum, build_position, build_quadrature, commutator_residual,
                   spectral_bound)


def test_ladder_trivial():
    a, ad = build_ladder(1, 0.5)
    assert a.entries.shape == (1, 1) and a.entries[0, 0] == 0
    assert a.kind is OperatorKind.ANNIHILATION and ad.kind is OperatorKind.CREATION


def test_ladder_deformed_entries():
    a, ad = build_ladder(3, 0.5)
    expected = np.zeros((3, 3))
    expected[0, 1] = 1.0
    expected[1, 2] = math.sqrt(1.25)
    assert np.allclose(a.entries, expected, atol=1e-15)
    assert np.array_equal(ad.entries, a.entries.conj().T)
    assert a.entries[1, 2] == pytest.approx(1.118034, abs=1e-6)


def test_ladder_classical():
    a, _ = build_ladder(3, 1.0)
    assert a.entries[0, 1] == 1.0
    assert a.entries[1, 2] == pytest.approx(math.sqrt(2), rel=1e-15)


def test_matrices_immutable():
    a, _ = build_ladder(3, 0.5)
    with pytest.raises(ValueError):
        a.entries[0, 0] = 1.0


def test_quadrature_examples():
    x = build_quadrature(2, 0.5, 0.0).entries
    assert np.allclose(x, [[0, 0.559017], [0.559017, 0]], atol=1e-6)
    x = build_quadrature(2, 1.0, 0.0).entries
    assert np.allclose(x, [[0, 1 / math.sqrt(2)], [1 / math.sqrt(2), 0]], atol=1e-15)


@pytest.mark.parametrize("N", [2, 5, 16])
def test_quadrature_special_angles(params, N):
    assert np.allclose(build_quadrature(N, params, 0.0).entries,
                       build_position(N, params).entries, atol=1e-15)
    assert np.allclose(build_quadrature(N, params, math.pi / 2).entries,
                       build_momentum(N, params).entries, atol=1e-15)


def test_quadrature_structure(params):
    x = build_quadrature(12, params, 0.83).entries
    assert np.array_equal(x, x.conj().T)
    assert np.all(np.diag(x) == 0)
    assert np.all(np.triu(x, 2) == 0) and np.all(np.tril(x, -2) == 0)
    s = params.quad_scale
    n = np.arange(11)
    expected = s * np.sqrt((1 - params.q ** (2 * (n + 1))) / (1 - params.q_sq)) if params.q < 1 \
        else s * np.sqrt(n + 1)
    assert np.allclose(np.diag(x, 1), expected * np.exp(-0.83j), rtol=1e-14)


def test_quadrature_wraps_theta():
    a = build_quadrature(6, 0.5, 1.0).entries
    b = build_quadrature(6, 0.5, 1.0 + 4 * math.pi).entries
    c = build_quadrature(6, 0.5, 1.0 - 2 * math.pi).entries
    assert np.allclose(a, b, atol=1e-14) and np.allclose(a, c, atol=1e-14)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 1.0), st.floats(0, 2 * math.pi), st.integers(1, 24))
def test_theta_covariance(q, theta, N):
    # U X_0 U^+ with U = diag(e^{i n theta}), formed at 30 digits
    x0 = build_quadrature(N, q, 0.0).entries
    x = build_quadrature(N, q, theta).entries
    expected = np.zeros((N, N), dtype=complex)
    with mpmath.workdps(30):
        t = mpmath.mpf(theta)
        for n in range(N - 1):
            phase = mpmath.exp(1j * n * t) * mpmath.exp(-1j * (n + 1) * t)
            expected[n, n + 1] = complex(mpmath.mpf(float(x0[n, n + 1].real)) * phase)
            expected[n + 1, n] = expected[n, n + 1].conjugate()
    assert np.abs(x - expected).max() <= 1e-14


def test_theta_covariance_float_composition():
    N, q, theta = 16, 0.5, 1.3
    x0 = build_quadrature(N, q, 0.0).entries
    u = np.diag(np.exp(1j * np.arange(N) * theta))
    assert np.abs(build_quadrature(N, q, theta).entries - u @ x0 @ u.conj().T).max() <= 1e-14


@settings(max_examples=30, deadline=None)
@given(st.floats(0.05, 0.99), st.floats(0, 2 * math.pi), st.integers(2, 80))
def test_spectral_bound(q, theta, N):
    ev = np.linalg.eigvalsh(build_quadrature(N, q, theta).entries)
    L = math.sqrt(1 + q * q) / math.sqrt(1 - q * q)
    assert spectral_bound(q) == pytest.approx(L, rel=1e-14)
    assert np.abs(ev).max() <= L


def test_eigenvalues_theta_independent():
    e0 = np.linalg.eigvalsh(build_quadrature(20, 0.6, 0.0).entries)
    e1 = np.linalg.eigvalsh(build_quadrature(20, 0.6, 2.2).entries)
    assert np.allclose(e0, e1, atol=1e-13)


@pytest.mark.parametrize("N, q, tol", [(16, 0.5, 1e-12), (2, 1.0, 1e-15), (8, 0.9, 1e-12)])
def test_algebra_residual_examples(N, q, tol):
    assert algebra_residual(N, q) <= tol


def test_algebra_artifact_is_only_last_entry():
    p = DeformationParams(0.5)
    a, ad = build_ladder(6, p)
    r = a.entries @ ad.entries - p.q_sq * ad.entries @ a.entries - np.eye(6)
    assert abs(r[5, 5]) > 0.1
    r[5, 5] = 0
    assert np.abs(r).max() <= 1e-15


@pytest.mark.parametrize("N, q", [(16, 0.5), (16, 1.0), (4, 0.7), (64, 0.99)])
def test_commutator_residual_examples(N, q):
    assert commutator_residual(N, q) <= 1e-12


def test_classical_commutator_is_i():
    x = build_position(10, 1.0).entries
    p = build_momentum(10, 1.0).entries
    c = x @ p - p @ x
    assert np.abs(c - 1j * np.eye(10))[:8, :8].max() <= 1e-14


def test_residual_preconditions():
    with pytest.raises(ValueError):
        algebra_residual(1, 0.5)
    with pytest.raises(ValueError):
        commutator_residual(3, 0.5)
    with pytest.raises(ValueError):
        build_ladder(0, 0.5)
