"""
Quadrature wavefunctions of deformed Fock states
================================================

The J_n polynomials, evaluated on the Gauss nodes of the truncated
quadrature, give the discrete wavefunctions <X|n>. At q = 1 they become
Hermite functions; for q < 1 the probability piles up near the spectral
edges.
"""
import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from qtomo import compute_measure, hermite_reference, j_table, tomogram_fock

fig, axes = plt.subplots(1, 3, figsize=(12, 3.5), sharey=True)
for ax, q in zip(axes, (1.0, 0.9, 0.6)):
    m = compute_measure(96, q)
    for n in (0, 1, 4):
        ax.plot(m.nodes, tomogram_fock(n, 0.0, m) / m.spacings(), label=f"n={n}")
    ax.set_title(f"q = {q}")
    ax.set_xlabel("X")
axes[0].set_ylabel("|<X|n>|^2 density")
axes[0].legend()
fig.tight_layout()
fig.savefig("fock_densities.png", dpi=120)

# how fast J_n approaches the normalized Hermite polynomials
x = np.linspace(-3, 3, 121)
h = hermite_reference(10, x)
for eps in (1e-2, 1e-3, 1e-4, 1e-5):
    gap = np.abs(j_table(10, 1 - eps, x) - h).max()
    print(f"q = 1 - {eps:g}: max |J_n - h_n| over n<=10, |x|<=3 = {gap:.3e}")
