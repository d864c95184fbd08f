"""Deformed coherent states and optical tomograms on the spectral measure."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (IndexOutOfTruncation, MeasureMismatch, OutsideConvergenceDisk,
                     TruncationTooSmall)
from .qcore import as_params, q_exponential, q_numbers, tail_after
from .qoperators import build_quadrature, wrap_theta
from .quadrature_measure import SpectralMeasure


@dataclass(frozen=True)
class QCoherentState:
    """Truncated q-coherent state; ``tail_bound`` majorises the discarded
    probability sum_{n>=N} |c_n|^2."""

    alpha: complex
    q: float
    coeffs: np.ndarray
    tail_bound: float

    @property
    def N(self) -> int:
        return self.coeffs.size


@dataclass(frozen=True)
class TomogramGrid:
    theta_values: np.ndarray
    measure: SpectralMeasure
    probabilities: np.ndarray
    densities: np.ndarray
    tail_bound: float = 0.0


def make_coherent(alpha: complex, p, N: int, tol: float = 1e-10) -> QCoherentState:
    """Coefficients ``alpha^n / sqrt([n]! E_q(|alpha|^2))`` for n < N."""
    p = as_params(p)
    alpha = complex(alpha)
    if N < 1:
        raise ValueError("N must be positive")
    z = abs(alpha) ** 2
    if z >= p.conv_radius:
        raise OutsideConvergenceDisk(
            f"|alpha|^2 = {z:g} lies outside the convergence disk "
            f"|alpha|^2 < 1/(1-q^2) = {p.conv_radius:g} (q={p.q})"
        )
    norm = q_exponential(z, p, tol=min(tol, 1e-14) * 1e-2)
    root = np.sqrt(q_numbers(N - 1, p))
    unnorm = np.empty(N, dtype=complex)
    unnorm[0] = 1.0
    # z^n/[n]! accumulated alongside, for the tail bound
    term = 1.0
    for n in range(1, N):
        unnorm[n] = unnorm[n - 1] * alpha / root[n]
        term *= z / root[n] ** 2
    tail = min(1.0, tail_after(term, z, N - 1, p) / norm)
    if tail > tol:
        raise TruncationTooSmall(
            f"truncation N={N} leaves tail bound {tail:.3g} > tol={tol:g}; increase N"
        )
    return QCoherentState(alpha, p.q, unnorm / math.sqrt(norm), tail)


def tomogram_fock(n: int, theta: float, m: SpectralMeasure) -> np.ndarray:
    """Per-node probabilities ``J_n(x_k)^2 w_k``; independent of theta."""
    if n < 0 or n >= m.N:
        raise IndexOutOfTruncation(f"Fock index {n} is not below truncation N={m.N}")
    return m.amplitudes[n] ** 2


def _check_compatible(state: QCoherentState, m: SpectralMeasure):
    if state.q != m.q:
        raise MeasureMismatch(f"state built at q={state.q}, measure at q={m.q}")
    if state.N > m.N:
        raise MeasureMismatch(f"state has {state.N} coefficients, measure only N={m.N}")


def tomogram_coherent(state: QCoherentState, theta: float, m: SpectralMeasure) -> np.ndarray:
    """``w_k |sum_n c_n J_n(x_k) e^{-i n theta}|^2`` at every node.

    Evaluated with sqrt(w_k) folded into the polynomial table so edge nodes
    with underflowing weights stay finite.
    """
    _check_compatible(state, m)
    n = np.arange(state.N)
    amp = (state.coeffs * np.exp(-1j * n * wrap_theta(theta))) @ m.amplitudes[: state.N]
    return np.abs(amp) ** 2


def density_estimate(probabilities: np.ndarray, m: SpectralMeasure) -> np.ndarray:
    """Probability per unit quadrature, ``p_k / Delta_k``; an O(1/N)
    approximation of the continuous tomogram."""
    return probabilities / m.spacings()


def tomogram_grid(thetas, m: SpectralMeasure, *, state: QCoherentState | None = None,
                  fock_n: int | None = None) -> TomogramGrid:
    """Evaluate a coherent-state or Fock-state tomogram over many phases."""
    if (state is None) == (fock_n is None):
        raise ValueError("pass exactly one of state= or fock_n=")
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    if state is not None:
        rows = [tomogram_coherent(state, t, m) for t in thetas]
        tail = state.tail_bound
    else:
        rows = [tomogram_fock(fock_n, t, m) for t in thetas]
        tail = 0.0
    probs = np.array(rows).reshape(thetas.size, m.N)
    return TomogramGrid(thetas, m, probs, density_estimate(probs, m), tail)


def gaussian_oracle(alpha: complex, theta: float, x):
    """Glauber coherent-state tomogram ``pi^{-1/2} exp(-(x - sqrt2 Re(alpha e^{-i theta}))^2)``."""
    centre = math.sqrt(2.0) * (complex(alpha) * np.exp(-1j * theta)).real
    return np.exp(-(np.asarray(x, dtype=float) - centre) ** 2) / math.sqrt(math.pi)


def brute_force_tomogram(coeffs: np.ndarray, theta: float, p) -> np.ndarray:
    """|<X_theta|Phi>|^2 from a dense eigendecomposition of the quadrature
    matrix (size len(coeffs)); eigenvalues ascending.

    Independent of the recurrence and the Jacobi eigensolver; intended for
    small truncations as a cross-check.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    h = build_quadrature(coeffs.size, p, theta).entries
    _, vecs = np.linalg.eigh(h)
    return np.abs(vecs.conj().T @ coeffs) ** 2
