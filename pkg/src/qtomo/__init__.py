"""Homodyne tomography of q-deformed oscillator states.

Deformed algebra ``A A^dag - q^2 A^dag A = 1`` with ``0 < q <= 1``;
``q = 1`` is the ordinary oscillator.
"""

__version__ = "0.1.0"

from .errors import (DivergentSeries, EigensolveFailure, IndexOutOfTruncation,
                     MeasureMismatch, OutsideConvergenceDisk, QDomainError, QOverflow,
                     TruncationTooSmall)
from .qcore import DeformationParams, q_exponential, q_factorial, q_number, q_numbers
from .qoperators import (OperatorKind, OperatorMatrix, algebra_residual, build_ladder,
                         build_momentum, build_position, build_quadrature,
                         commutator_residual, spectral_bound)
from .qpolynomials import PolySequence, eval_J, hermite_reference, j_table
from .quadrature_measure import (DiscreteWavefunction, SpectralMeasure, compute_measure,
                                 eval_psi, orthonormality_residual, psi_matrix,
                                 write_measure_csv)
from .tomography import (QCoherentState, TomogramGrid, brute_force_tomogram,
                         density_estimate, gaussian_oracle, make_coherent,
                         tomogram_coherent, tomogram_fock, tomogram_grid)
