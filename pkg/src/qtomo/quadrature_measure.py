"""Discrete spectral measure of the truncated quadrature operator and the
Fock-state quadrature wavefunctions built on it.

The ground-state quadrature density is not available in closed form, so
it is represented by Gauss-type nodes and weights of the theta = 0 Jacobi
matrix (Golub-Welsch). With those weights the J_n are exactly orthonormal
at every truncation.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .errors import EigensolveFailure, IndexOutOfTruncation
from .qcore import DeformationParams, as_params, q_numbers
from .qoperators import wrap_theta
from .qpolynomials import j_table


@dataclass(frozen=True)
class SpectralMeasure:
    params: DeformationParams
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    @property
    def N(self) -> int:
        return self.nodes.size

    @property
    def q(self) -> float:
        return self.params.q

    def spacings(self) -> np.ndarray:
        """Half-neighbour spacing (x_{k+1} - x_{k-1})/2, one-sided at the ends.

        NaN for a single node, where no density can be formed.
        """
        x = self.nodes
        if x.size == 1:
            return np.array([math.nan])
        d = np.empty_like(x)
        d[1:-1] = 0.5 * (x[2:] - x[:-2])
        d[0] = x[1] - x[0]
        d[-1] = x[-1] - x[-2]
        return d

    def polynomials(self) -> np.ndarray:
        """J_n(x_k) as an (N, N) array, row n, column k."""
        return j_table(self.N - 1, self.params, self.nodes)

    @cached_property
    def amplitudes(self) -> np.ndarray:
        """``J_n(x_k) sqrt(w_k)`` as an (N, N) orthogonal matrix (theta = 0)."""
        return normalized_table(self.params, self.nodes)


@dataclass(frozen=True)
class DiscreteWavefunction:
    n: int
    theta: float
    values: np.ndarray


def jacobi_offdiagonal(N: int, p) -> np.ndarray:
    p = as_params(p)
    return p.quad_scale * np.sqrt(q_numbers(N - 1, p)[1:])


_RESCALE = 1e100


def normalized_table(p, nodes: np.ndarray) -> np.ndarray:
    """Columns (J_0(x_k), ..., J_{N-1}(x_k)) scaled to unit length.

    Same recurrence as :func:`j_table`, but columns are rescaled on the fly
    so nothing overflows; at a Gauss node the unit column is exactly
    ``J_n(x_k) sqrt(w_k)``.
    """
    p = as_params(p)
    N = nodes.size
    root = np.sqrt(q_numbers(N, p))
    slope = 2.0 / math.sqrt(1.0 + p.q_sq)
    out = np.empty((N, N))
    out[0] = 1.0
    if N > 1:
        out[1] = slope * nodes / root[1]
    for n in range(1, N - 1):
        out[n + 1] = (slope * nodes * out[n] - root[n] * out[n - 1]) / root[n + 1]
        big = np.abs(out[n + 1]) > _RESCALE
        if big.any():
            out[: n + 2, big] /= _RESCALE
    return out / np.sqrt(np.sum(out**2, axis=0))


def compute_measure(N: int, p) -> SpectralMeasure:
    """Nodes and weights of the N x N theta = 0 quadrature matrix.

    Nodes are its eigenvalues (ascending). Weights are the squared first
    components of the eigenvectors, taken from the recurrence-generated
    eigenvectors rather than the solver's, which keeps full relative
    accuracy for the tiny weights at the edge of the spectrum.
    """
    if int(N) != N or N < 1:
        raise ValueError(f"truncation must be a positive integer, got {N!r}")
    N = int(N)
    p = as_params(p)
    if N == 1:
        return SpectralMeasure(p, np.zeros(1), np.ones(1))
    off = jacobi_offdiagonal(N, p)
    try:
        nodes = eigh_tridiagonal(np.zeros(N), off, eigvals_only=True)
    except LinAlgError as exc:
        raise EigensolveFailure(str(exc)) from exc
    # zero diagonal: the spectrum is exactly symmetric
    nodes = 0.5 * (nodes - nodes[::-1])
    assert np.all(np.diff(nodes) > 0), "degenerate nodes in an unreduced Jacobi matrix"
    # J_n(-x) = (-1)^n J_n(x) holds bitwise, so the weights inherit the mirror symmetry
    weights = normalized_table(p, nodes)[0] ** 2
    return SpectralMeasure(p, nodes, weights)


def measure_from_matrix(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and first-component weights of an arbitrary Hermitian matrix
    via a dense eigensolve; used to cross-check theta independence."""
    vals, vecs = np.linalg.eigh(h)
    return vals, np.abs(vecs[0]) ** 2


def eval_psi(n: int, theta: float, m: SpectralMeasure) -> DiscreteWavefunction:
    """``psi_n[k] = J_n(x_k) e^{-i n theta} sqrt(w_k)``, the discrete
    quadrature representation <X_theta|n> of the deformed Fock state."""
    if n < 0 or n >= m.N:
        raise IndexOutOfTruncation(f"Fock index {n} is not below truncation N={m.N}")
    phase = np.exp(-1j * n * wrap_theta(theta))
    return DiscreteWavefunction(n, theta, m.amplitudes[n] * phase)


def psi_matrix(m: SpectralMeasure, theta: float) -> np.ndarray:
    """(N, N) array with row a = psi_a over the nodes."""
    phase = np.exp(-1j * np.arange(m.N) * wrap_theta(theta))
    return m.amplitudes * phase[:, None]


def orthonormality_residual(m: SpectralMeasure, n_max: int) -> float:
    """max_{a,b <= n_max} |sum_k J_a J_b w_k - delta_ab|."""
    if n_max < 0 or n_max >= m.N:
        raise IndexOutOfTruncation(f"n_max={n_max} must be below N={m.N}")
    j = j_table(n_max, m.params, m.nodes)
    gram = (j * m.weights) @ j.T
    return float(np.abs(gram - np.eye(n_max + 1)).max())


def write_measure_csv(m: SpectralMeasure, fh=None) -> str | None:
    """Dump ``k,x,w`` rows at 17 significant digits. Returns the text if no
    file handle is given."""
    out = io.StringIO() if fh is None else fh
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["k", "x", "w"])
    for k, (x, w) in enumerate(zip(m.nodes, m.weights)):
        writer.writerow([k, f"{x:.17g}", f"{w:.17g}"])
    return out.getvalue() if fh is None else None
