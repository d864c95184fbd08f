"""Scalar q-arithmetic: q-numbers, q-factorials and the q-exponential."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DivergentSeries, QOverflow


@dataclass(frozen=True)
class DeformationParams:
    """Deformation parameter q in (0, 1] and the constants derived from it.

    ``q == 1`` is the undeformed oscillator and is handled by exact
    branches (``[n] = n``, ``[n]! = n!``, ``E_q = exp``).
    """

    q: float
    q_sq: float = field(init=False)
    quad_scale: float = field(init=False)
    conv_radius: float = field(init=False)

    def __post_init__(self):
        q = float(self.q)
        if not (0.0 < q <= 1.0) or math.isnan(q):
            raise ValueError(f"q must lie in (0, 1], got {self.q!r}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "q_sq", q * q)
        object.__setattr__(self, "quad_scale", math.sqrt(1.0 + q * q) / 2.0)
        radius = math.inf if q == 1.0 else 1.0 / _one_minus_q_pow(q, 1)
        object.__setattr__(self, "conv_radius", radius)

    @property
    def classical(self) -> bool:
        return self.q == 1.0


def as_params(p) -> DeformationParams:
    """Accept either a :class:`DeformationParams` or a bare q value."""
    if isinstance(p, DeformationParams):
        return p
    return DeformationParams(float(p))


def _one_minus_q_pow(q, n):
    # 1 - q^(2n) without cancellation when q is close to 1
    return -np.expm1(2.0 * np.asarray(n, dtype=float) * math.log(q))


def q_number(n: int, p) -> float:
    """Deformed number ``[n] = (1 - q^(2n)) / (1 - q^2)``; equals n at q = 1."""
    p = as_params(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if p.classical:
        return float(n)
    return float(_one_minus_q_pow(p.q, n) / _one_minus_q_pow(p.q, 1))


def q_numbers(n_max: int, p) -> np.ndarray:
    """Array ``[0], [1], ..., [n_max]``."""
    p = as_params(p)
    n = np.arange(n_max + 1, dtype=float)
    if p.classical:
        return n
    return _one_minus_q_pow(p.q, n) / _one_minus_q_pow(p.q, 1)


def q_factorial(n: int, p) -> float:
    """``[n]! = [1][2]...[n]`` with ``[0]! = 1``.

    Raises :class:`QOverflow` if the product leaves the double range.
    """
    p = as_params(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = 1.0
    for k in q_numbers(n, p)[1:].tolist():
        result *= k
    if math.isinf(result):
        raise QOverflow(f"[{n}]! overflows double precision at q={p.q}")
    return result


def tail_after(term: float, z: float, n: int, p) -> float:
    """Upper bound on sum_{k>n} z^k/[k]! given ``term = z^n/[n]!``.

    Successive term ratios z/[k+1] decrease in k, so z/[n+1] dominates
    every later ratio and the tail is majorised by a geometric series.
    Returns ``inf`` when that ratio is not below one.
    """
    if term == 0.0:
        return 0.0
    ratio = z / q_number(n + 1, p)
    if ratio >= 1.0:
        return math.inf
    return term * ratio / (1.0 - ratio)


def q_exponential(z: float, p, tol: float = 1e-12, max_terms: int = 10_000_000) -> float:
    """``E_q(z) = sum_n z^n / [n]!`` for real ``0 <= z < 1/(1 - q^2)``.

    Summation stops once the geometric tail bound drops below ``tol``.
    """
    p = as_params(p)
    if z < 0:
        raise ValueError("z must be nonnegative")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if z >= p.conv_radius:
        raise DivergentSeries(
            f"E_q diverges: z={z} is outside the convergence disk "
            f"z < 1/(1-q^2) = {p.conv_radius} (q={p.q})"
        )
    total = 1.0
    term = 1.0
    n = 0
    while tail_after(term, z, n, p) >= tol:
        n += 1
        if n > max_terms:
            raise DivergentSeries(f"E_q({z}) did not reach tol={tol} in {max_terms} terms")
        term *= z / q_number(n, p)
        total += term
    return total
