import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import eval_hermite

from qtomo import DeformationParams, QOverflow, eval_J, hermite_reference, j_table, q_numbers


def scipy_hermite_functions(n_max, x):
    n = np.arange(n_max + 1)
    norm = np.sqrt(2.0**n * np.array([math.factorial(k) for k in n], dtype=float))
    return np.array([eval_hermite(k, x) for k in n]) / norm.reshape((-1,) + (1,) * np.ndim(x))


@pytest.mark.parametrize("q", [0.2, 0.5, 1.0])
def test_J0_is_one(q):
    seq = eval_J(0, q, 3.7)
    assert seq.values.tolist() == [1.0]
    assert seq.q == q and seq.x == 3.7


def test_J_hand_values():
    j = eval_J(2, 0.5, 1.0).values
    # J_1 = 2/sqrt(1.25); J_2 = (J_1^2 - 1)/sqrt([2]) with [2] = 1.25
    assert j[1] == pytest.approx(2 / math.sqrt(1.25), rel=1e-15)
    assert j[1] == pytest.approx(1.788854, abs=1e-6)
    assert j[2] == pytest.approx(2.2 / math.sqrt(1.25), rel=1e-14)
    assert j[2] == pytest.approx(1.967740, abs=1e-6)


def test_J_classical_matches_hermite():
    j = eval_J(3, 1.0, 0.5).values
    assert np.allclose(j, scipy_hermite_functions(3, 0.5), rtol=1e-14)


@pytest.mark.parametrize("n_max, x, expected", [
    (1, 0.3, [1.0, 0.3 * math.sqrt(2)]),
    (2, 0.0, [1.0, 0.0, -1 / math.sqrt(2)]),
])
def test_hermite_reference_examples(n_max, x, expected):
    assert np.allclose(hermite_reference(n_max, x), expected, rtol=1e-15, atol=1e-16)


def test_hermite_reference_h4():
    h = hermite_reference(4, 1.0)
    assert h[4] == pytest.approx(-20 / math.sqrt(384), rel=1e-15)
    assert h[4] == pytest.approx(-1.020621, abs=1e-6)


def test_hermite_reference_vs_scipy():
    x = np.linspace(-4, 4, 33)
    assert np.allclose(hermite_reference(20, x), scipy_hermite_functions(20, x), rtol=1e-12, atol=1e-12)


def test_j_table_shape():
    assert j_table(5, 0.5, np.zeros((3, 4))).shape == (6, 3, 4)
    assert j_table(5, 0.5, 0.2).shape == (6,)


def test_overflow_guard():
    with pytest.raises(QOverflow):
        j_table(400, 0.5, 1e3)
    with pytest.raises(QOverflow):
        hermite_reference(400, 50.0)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 1.0), st.floats(-1.3, 1.3))
def test_recurrence_residual(q, x):
    p = DeformationParams(q)
    j = j_table(64, p, x)
    root = np.sqrt(q_numbers(65, p))
    slope = 2 / math.sqrt(1 + p.q_sq)
    n = np.arange(1, 64)
    res = root[n + 1] * j[2:] - slope * x * j[1:-1] + root[n] * j[:-2]
    assert np.all(np.abs(res) <= 1e-10 * np.maximum(1, np.abs(j[1:-1])))


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 1.0), st.floats(0.01, 3.0))
def test_parity(q, x):
    jp, jm = j_table(64, q, x), j_table(64, q, -x)
    sign = (-1.0) ** np.arange(65)
    assert np.all(np.abs(jm - sign * jp) <= 1e-12 * np.abs(jp))


@pytest.mark.parametrize("q", [0.3, 0.5, 0.9, 1.0])
def test_leading_coefficient(q):
    p = DeformationParams(q)
    qn = q_numbers(10, p)
    lead = (2 / math.sqrt(1 + p.q_sq)) ** np.arange(11) / np.sqrt(np.cumprod(np.r_[1.0, qn[1:]]))
    for x in (1e3, -1e3):
        ratio = j_table(2, p, x) / x ** np.arange(3)
        assert np.all(np.abs(ratio / lead[:3] - 1) <= 1e-6)
    # higher degrees: the subleading term is O(n^2 / x^2)
    x = 1e5
    ratio = j_table(10, p, x) / x ** np.arange(11)
    assert np.all(np.abs(ratio / lead - 1) <= 1e-6)


def test_polynomial_degree():
    # degree-n polynomial: (n+1)-th finite difference on a uniform grid vanishes
    x = np.linspace(-1, 1, 12)
    j = j_table(6, 0.7, x)
    for n in range(7):
        d = np.diff(j[n], n + 1)
        assert np.abs(d).max() <= 1e-10


def test_hermite_limit_exact_branch():
    x = np.linspace(-3, 3, 61)
    assert np.abs(j_table(10, 1.0, x) - hermite_reference(10, x)).max() <= 1e-12


def test_hermite_limit_converges_linearly():
    x = np.linspace(-3, 3, 61)
    h = hermite_reference(10, x)
    d = [np.abs(j_table(10, 1 - eps, x) - h).max() for eps in (1e-3, 1e-4, 1e-5, 1e-6)]
    assert all(b < a for a, b in zip(d, d[1:]))
    ratios = np.array(d[1:]) / np.array(d[:-1])
    assert np.allclose(ratios, 0.1, atol=0.01)
