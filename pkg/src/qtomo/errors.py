"""Exception hierarchy.

Everything deriving from :class:`QDomainError` is a math-domain failure
(bad amplitude, truncation too small, runaway recurrence); the command
line maps those to exit status 3.
"""


class QDomainError(ValueError):
    """Input lies outside the domain where a quantity is defined."""


class DivergentSeries(QDomainError):
    """The q-exponential series does not converge for this argument."""


class OutsideConvergenceDisk(DivergentSeries):
    """Coherent-state amplitude has |alpha|^2 >= 1/(1 - q^2)."""


class TruncationTooSmall(QDomainError):
    """The certified truncation tail exceeds the requested tolerance."""


class IndexOutOfTruncation(QDomainError, IndexError):
    """Fock index is not represented faithfully at this truncation."""


class QOverflow(QDomainError, OverflowError):
    """A factorial or polynomial value left the floating-point range."""


class MeasureMismatch(ValueError):
    """State and spectral measure were built for different q or sizes."""


class EigensolveFailure(RuntimeError):
    """The tridiagonal eigensolver did not converge."""
