"""The J_n polynomials of the deformed quadrature and the normalized
Hermite reference they reduce to at q = 1."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import QOverflow
from .qcore import as_params, q_numbers

OVERFLOW_LIMIT = 1e300


@dataclass(frozen=True)
class PolySequence:
    q: float
    x: float
    values: np.ndarray


def j_table(n_max: int, p, x) -> np.ndarray:
    """J_0..J_{n_max} at every point of ``x``; shape ``(n_max+1,) + x.shape``.

    Forward three-term recurrence

        sqrt([n+1]) J_{n+1} = (2x/sqrt(1+q^2)) J_n - sqrt([n]) J_{n-1},

    stable for x inside the spectral interval.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    p = as_params(p)
    x = np.asarray(x, dtype=float)
    root = np.sqrt(q_numbers(n_max + 1, p))
    slope = 2.0 / math.sqrt(1.0 + p.q_sq)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = slope * x / root[1]
    for n in range(1, n_max):
        out[n + 1] = (slope * x * out[n] - root[n] * out[n - 1]) / root[n + 1]
        if not np.all(np.abs(out[n + 1]) <= OVERFLOW_LIMIT):
            raise QOverflow(
                f"|J_{n + 1}| exceeds {OVERFLOW_LIMIT:g}; x is far outside the spectral interval"
            )
    return out


def eval_J(n_max: int, p, x: float) -> PolySequence:
    p = as_params(p)
    return PolySequence(p.q, float(x), j_table(n_max, p, float(x)))


def hermite_reference(n_max: int, x) -> np.ndarray:
    """``H_n(x) / sqrt(2^n n!)`` for n = 0..n_max (physicists' Hermite).

    Runs the plain recurrence ``H_{n+1} = 2x H_n - 2n H_{n-1}`` and
    normalizes afterwards; meant as an independent q = 1 oracle for small n.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    x = np.asarray(x, dtype=float)
    h = np.empty((n_max + 1,) + x.shape)
    h[0] = 1.0
    if n_max >= 1:
        h[1] = 2.0 * x
    for n in range(1, n_max):
        h[n + 1] = 2.0 * x * h[n] - 2.0 * n * h[n - 1]
        if not np.all(np.abs(h[n + 1]) <= OVERFLOW_LIMIT):
            raise QOverflow(f"|H_{n + 1}({x})| exceeds {OVERFLOW_LIMIT:g}")
    n = np.arange(n_max + 1)
    log_norm = 0.5 * (n * math.log(2.0) + np.array([math.lgamma(k + 1) for k in n]))
    return h / np.exp(log_norm).reshape((-1,) + (1,) * x.ndim)
