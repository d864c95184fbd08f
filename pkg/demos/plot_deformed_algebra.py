"""
The deformed oscillator in a truncated Fock space
=================================================

Builds the ladder and quadrature matrices for a few values of q, confirms
the defining relations hold away from the truncation edge, and shows how
the quadrature spectrum stays inside a finite interval once q < 1.
"""
import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from qtomo import (algebra_residual, build_quadrature, commutator_residual, q_numbers,
                   spectral_bound)

# q-numbers saturate at 1/(1-q^2) instead of growing like n
n = np.arange(30)
for q in (0.5, 0.8, 0.95, 1.0):
    plt.plot(n, q_numbers(29, q), "o-", ms=3, label=f"q={q}")
plt.xlabel("n")
plt.ylabel("[n]")
plt.legend()
plt.savefig("q_numbers.png", dpi=120)
plt.close()

# both algebra residuals sit at rounding level
for q in (0.3, 0.9, 1.0):
    print(f"q={q}:  AA+ - q^2 A+A - 1 -> {algebra_residual(64, q):.1e}   "
          f"[X,P] identity -> {commutator_residual(64, q):.1e}")

# eigenvalues of the truncated quadrature, against the Gershgorin bound
for q in (0.5, 0.9):
    ev = np.linalg.eigvalsh(build_quadrature(128, q, 0.3).entries)
    print(f"q={q}: largest |eigenvalue| {np.abs(ev).max():.6f}  bound {spectral_bound(q):.6f}")
