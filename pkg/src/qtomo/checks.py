"""Invariant suite behind ``qtomo --mode check``.

Every check returns a measured residual and the threshold it must stay
under. Checks marked with a fixed (q, N) in their name ignore the user's
parameters.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .qcore import as_params, q_exponential, q_number, q_numbers
from .qoperators import (algebra_residual, build_quadrature, commutator_residual,
                         spectral_bound)
from .qpolynomials import hermite_reference, j_table
from .quadrature_measure import (compute_measure, measure_from_matrix,
                                 orthonormality_residual, psi_matrix)
from .tomography import (brute_force_tomogram, density_estimate, gaussian_oracle,
                         make_coherent, tomogram_coherent, tomogram_fock)

THETAS = (0.0, 1.1, math.pi / 2)


@dataclass
class CheckResult:
    name: str
    value: float
    threshold: float

    @property
    def passed(self) -> bool:
        return bool(self.value <= self.threshold)


def _safe_alpha(p, fraction=0.25):
    # inside the convergence disk and cheap to truncate
    return min(0.9, math.sqrt(fraction * p.conv_radius))


def hermite_limit_discrepancy(q: float, n_max: int = 10, x_max: float = 3.0,
                              N: int = 64) -> float:
    """max over n <= n_max and measure nodes |x| <= x_max of |J_n - h_n|."""
    x = compute_measure(N, q).nodes
    x = x[np.abs(x) <= x_max]
    return float(np.abs(j_table(n_max, q, x) - hermite_reference(n_max, x)).max())


def glauber_discrepancy(alpha: complex, theta: float, q: float = 1 - 1e-4,
                        N: int = 128) -> float:
    m = compute_measure(N, q)
    state = make_coherent(alpha, q, N)
    dens = density_estimate(tomogram_coherent(state, theta, m), m)
    return float(np.abs(dens - gaussian_oracle(alpha, theta, m.nodes))[1:-1].max())


def _recurrence_residual(p, N):
    x = compute_measure(N, p).nodes
    j = j_table(N - 1, p, x)
    root = np.sqrt(q_numbers(N, p))
    slope = 2.0 / math.sqrt(1.0 + p.q_sq)
    n = np.arange(1, N - 1)[:, None]
    res = root[n + 1] * j[2:] - slope * x * j[1:-1] + root[n] * j[:-2]
    return float((np.abs(res) / np.maximum(1.0, np.abs(j[1:-1]))).max())


def _parity(p, N):
    x = np.linspace(0.05, 0.95, 7) * min(spectral_bound(p), 4.0)
    jp, jm = j_table(N, p, x), j_table(N, p, -x)
    sign = (-1.0) ** np.arange(N + 1)[:, None]
    return float((np.abs(jm - sign * jp) / np.maximum(1e-300, np.abs(jp))).max())


def _leading(p):
    x = 1e3
    n = np.arange(3)
    j = j_table(2, p, np.array([x, -x]))
    lead = (2.0 / math.sqrt(1 + p.q_sq)) ** n / np.sqrt(np.cumprod(np.maximum(q_numbers(2, p), 1.0)))
    ratio = j / np.array([x, -x])[None, :] ** n[:, None]
    return float((np.abs(ratio - lead[:, None]) / lead[:, None]).max())


def _covariance(p, N):
    worst = 0.0
    x0 = build_quadrature(N, p, 0.0).entries
    for t in THETAS:
        u = np.diag(np.exp(1j * np.arange(N) * t))
        worst = max(worst, np.abs(build_quadrature(N, p, t).entries - u @ x0 @ u.conj().T).max())
    return float(worst / max(1.0, np.abs(x0).max()))


def _hermiticity(p, N):
    return float(max(np.abs(h - h.conj().T).max()
                     for h in (build_quadrature(N, p, t).entries for t in THETAS)))


def _eigen_excess(p, N):
    x = np.linalg.eigvalsh(build_quadrature(N, p, 0.7).entries)
    return float(max(0.0, np.abs(x).max() - spectral_bound(p)))


def _monotone_bounded(p, n_max=400):
    qn = q_numbers(n_max, p)
    # strict growth only while q^(2n) is still resolvable next to 1
    live = p.q ** (2 * np.arange(n_max)) > 1e-15
    ok = np.all(np.diff(qn)[live] > 0) and np.all(qn <= p.conv_radius)
    return 0.0 if ok else 1.0


def _saturation():
    p = as_params(0.5)
    qn = q_numbers(200, p)
    return abs(p.conv_radius - qn[200])


def _classical_q_number():
    q = 1 - 1e-6
    return max(abs(q_number(n, q) - n) for n in range(11))


def _tail_soundness(p, tol=1e-12):
    z = 0.5 * min(p.conv_radius, 4.0)
    base = q_exponential(z, p, tol)
    # re-sum with 10 extra terms past the stopping index
    total, term, n = 1.0, 1.0, 0
    while total < base or n < 1:
        n += 1
        term *= z / q_number(n, p)
        total += term
    for _ in range(10):
        n += 1
        term *= z / q_number(n, p)
        total += term
    return abs(total - base) / tol


def _measure_sum(m):
    return abs(m.weights.sum() - 1.0)


def _mirror(m):
    return float(max(np.abs(m.nodes + m.nodes[::-1]).max(),
                     np.abs(m.weights - m.weights[::-1]).max()))


def _node_excess(m):
    return float(max(0.0, np.abs(m.nodes).max() - spectral_bound(m.params)))


def _theta_independence(m):
    worst = 0.0
    for t in THETAS:
        x, w = measure_from_matrix(build_quadrature(m.N, m.params, t).entries)
        worst = max(worst, np.abs(x - m.nodes).max(), np.abs(w - m.weights).max())
    return float(worst)


def _unitarity(m):
    worst = 0.0
    for t in THETAS:
        u = psi_matrix(m, t)
        eye = np.eye(m.N)
        worst = max(worst, np.abs(u @ u.conj().T - eye).max(), np.abs(u.conj().T @ u - eye).max())
    return float(worst)


def _eigenrelation(m):
    worst = 0.0
    if m.N == 1:
        return worst
    for t in THETAS:
        h = build_quadrature(m.N, m.params, t).entries
        kets = psi_matrix(m, t).conj()  # column k is |X_theta = x_k>
        res = (h @ kets - kets * m.nodes[None, :])[: m.N - 1]
        worst = max(worst, np.abs(res).max())
    return float(worst)


def _fock_norm(m):
    return float(max(abs(tomogram_fock(n, 0.3, m).sum() - 1.0) for n in range(m.N)))


def _coherent_norm(p, m):
    state = _coherent_state(p, m)
    total = tomogram_coherent(state, 0.4, m).sum()
    return float(max(0.0, total - 1.0, (1.0 - state.tail_bound) - total))


def _coherent_state(p, m):
    return make_coherent(_safe_alpha(p), p, m.N, tol=1.0)


def _periodicity(p, m):
    s = _coherent_state(p, m)
    return float(max(np.abs(tomogram_coherent(s, t, m) - tomogram_coherent(s, t + 2 * math.pi, m)).max()
                     for t in THETAS))


def _reflection(p, m):
    s = _coherent_state(p, m)
    return float(max(np.abs(tomogram_coherent(s, t, m) - tomogram_coherent(s, -t, m)).max()
                     for t in THETAS))


def _brute_force(p):
    worst = 0.0
    for N in range(1, 7):
        m = compute_measure(N, p)
        s = make_coherent(0.5, p, N, tol=1.0)
        for t in THETAS:
            worst = max(worst, np.abs(tomogram_coherent(s, t, m) - brute_force_tomogram(s.coeffs, t, p)).max())
    return float(worst)


def _hermite_convergence():
    """Ratio of successive discrepancies along q = 1 - 10^-3, -4, -5; must
    shrink (ratio < 1)."""
    d = [hermite_limit_discrepancy(1 - 10.0 ** -k) for k in (3, 4, 5)]
    return max(d[1] / d[0], d[2] / d[1])


def run_checks(q: float, N: int) -> list[CheckResult]:
    p = as_params(q)
    m = compute_measure(N, p)
    small = min(N, 128)
    checks: list[tuple[str, Callable[[], float], float]] = [
        ("q_number increasing and below 1/(1-q^2)", lambda: _monotone_bounded(p), 0.0),
        ("q_number saturation at n=200 (q=0.5)", _saturation, 1e-10),
        ("q_number -> n at q=1-1e-6 (n<=10)", _classical_q_number, 1e-4),
        ("E_q tail bound sound (+10 terms, in units of tol)", lambda: _tail_soundness(p), 1.0),
        ("algebra AA^+ - q^2 A^+A = 1", lambda: algebra_residual(max(small, 2), p), 1e-12),
        ("deformed commutator [X,P]", lambda: commutator_residual(max(small, 4), p), 1e-12),
        ("quadrature Hermitian", lambda: _hermiticity(p, N), 0.0),
        # rounding of n*theta grows with N; bound is relative to the largest entry
        ("theta covariance U X_0 U^+ (N<=32, relative)", lambda: _covariance(p, min(N, 32)), 1e-14),
        ("eigenvalues within +-L", lambda: _eigen_excess(p, N), 1e-12),
        ("J recurrence residual (N<=128)", lambda: _recurrence_residual(p, min(max(N, 3), 128)), 1e-10),
        ("J parity (n<=64)", lambda: _parity(p, 64), 1e-12),
        ("J leading coefficient at |x|=1e3 (n<=2)", lambda: _leading(p), 1e-6),
        ("Hermite limit exact at q=1", lambda: hermite_limit_discrepancy(1.0), 1e-12),
        ("Hermite discrepancy shrinks as q->1", _hermite_convergence, 0.5),
        ("weights sum to 1", lambda: _measure_sum(m), 1e-12),
        ("node/weight mirror symmetry", lambda: _mirror(m), 1e-12),
        ("nodes within +-L", lambda: _node_excess(m), 1e-12),
        ("measure independent of theta", lambda: _theta_independence(m), 1e-12),
        ("orthonormality residual (n<=min(20,N-1))",
         lambda: orthonormality_residual(m, min(20, N - 1)), 1e-10),
        ("psi matrix unitary", lambda: _unitarity(m), 1e-10),
        ("eigenrelation X psi = x psi", lambda: _eigenrelation(m), 1e-10),
        ("Fock tomograms normalized", lambda: _fock_norm(m), 1e-10),
        ("coherent tomogram in [1-tail, 1]", lambda: _coherent_norm(p, m), 1e-10),
        ("theta periodicity", lambda: _periodicity(p, m), 1e-12),
        ("real-alpha theta reflection", lambda: _reflection(p, m), 1e-12),
        ("brute-force dense eigenvectors (N<=6)", lambda: _brute_force(p), 1e-10),
    ]
    for a in (0.3, 0.8 + 0.2j):
        for t in (0.0, math.pi / 4, math.pi / 2):
            checks.append((f"Glauber limit q=1-1e-4 N=128 alpha={a} theta={t:.4f}",
                           lambda a=a, t=t: glauber_discrepancy(a, t), 2e-2))
    return [CheckResult(name, float(fn()), thr) for name, fn, thr in checks]


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'check'.ljust(width)}  {'residual':>12}  {'threshold':>10}  result"]
    for r in results:
        lines.append(f"{r.name.ljust(width)}  {r.value:12.3e}  {r.threshold:10.1e}  "
                     f"{'PASS' if r.passed else 'FAIL'}")
    return "\n".join(lines)
