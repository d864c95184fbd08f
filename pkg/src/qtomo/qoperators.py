"""Truncated Fock-space matrices of the deformed ladder operators and
quadratures, with residual checks of the defining algebra."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .qcore import as_params, q_numbers


class OperatorKind(enum.Enum):
    ANNIHILATION = "annihilation"
    CREATION = "creation"
    POSITION = "position"
    MOMENTUM = "momentum"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class OperatorMatrix:
    entries: np.ndarray
    kind: OperatorKind
    theta: float | None = None

    def __post_init__(self):
        self.entries.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def _check_dim(N, minimum=1):
    if int(N) != N or N < minimum:
        raise ValueError(f"truncation must be an integer >= {minimum}, got {N!r}")
    return int(N)


def wrap_theta(theta: float) -> float:
    return math.fmod(theta, 2 * math.pi) % (2 * math.pi)


def build_ladder(N: int, p) -> tuple[OperatorMatrix, OperatorMatrix]:
    """Annihilation and creation matrices on the first N deformed Fock states."""
    N = _check_dim(N)
    p = as_params(p)
    a = np.zeros((N, N), dtype=complex)
    idx = np.arange(1, N)
    a[idx - 1, idx] = np.sqrt(q_numbers(N - 1, p)[1:])
    return (
        OperatorMatrix(a, OperatorKind.ANNIHILATION),
        OperatorMatrix(a.conj().T.copy(), OperatorKind.CREATION),
    )


def build_position(N: int, p) -> OperatorMatrix:
    p = as_params(p)
    a, ad = build_ladder(N, p)
    return OperatorMatrix(p.quad_scale * (ad.entries + a.entries), OperatorKind.POSITION)


def build_momentum(N: int, p) -> OperatorMatrix:
    p = as_params(p)
    a, ad = build_ladder(N, p)
    return OperatorMatrix(1j * p.quad_scale * (ad.entries - a.entries), OperatorKind.MOMENTUM)


def build_quadrature(N: int, p, theta: float) -> OperatorMatrix:
    """Homodyne quadrature ``s (A e^{-i theta} + A^dag e^{i theta})`` with
    ``s = sqrt(1+q^2)/2``. Hermitian, tridiagonal, zero diagonal."""
    N = _check_dim(N)
    p = as_params(p)
    theta = wrap_theta(theta)
    off = p.quad_scale * np.sqrt(q_numbers(N - 1, p)[1:]) * np.exp(-1j * theta)
    x = np.zeros((N, N), dtype=complex)
    idx = np.arange(N - 1)
    x[idx, idx + 1] = off
    x[idx + 1, idx] = off.conj()
    return OperatorMatrix(x, OperatorKind.QUADRATURE, theta)


def spectral_bound(p) -> float:
    """Gershgorin bound ``sqrt(1+q^2)/sqrt(1-q^2)`` on the quadrature spectrum
    (infinite at q = 1)."""
    p = as_params(p)
    if p.classical:
        return math.inf
    return math.sqrt(1 + p.q_sq) * math.sqrt(p.conv_radius)


def algebra_residual(N: int, p) -> float:
    """max |AA^dag - q^2 A^dag A - I| excluding the last diagonal entry,
    which truncation corrupts."""
    N = _check_dim(N, 2)
    p = as_params(p)
    a, ad = build_ladder(N, p)
    a, ad = a.entries, ad.entries
    r = a @ ad - p.q_sq * (ad @ a) - np.eye(N)
    r[N - 1, N - 1] = 0.0
    return float(np.abs(r).max())


def commutator_residual(N: int, p) -> float:
    """Residual of ``[X,P] = i(1 + (q^2-1)/(q^2+1) (X^2+P^2))`` on the
    leading (N-2)x(N-2) block."""
    N = _check_dim(N, 4)
    p = as_params(p)
    x = build_position(N, p).entries
    pm = build_momentum(N, p).entries
    lhs = x @ pm - pm @ x
    rhs = 1j * (np.eye(N) + (p.q_sq - 1) / (p.q_sq + 1) * (x @ x + pm @ pm))
    return float(np.abs(lhs - rhs)[: N - 2, : N - 2].max())
