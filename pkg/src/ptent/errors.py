"""Exception types shared by every module in the package.

All of them derive from :class:`PTError` so callers (the CLI in particular)
can treat any validation or invariant failure uniformly.
"""


class PTError(ValueError):
    """Base class for validation and invariant failures in this package."""


class DimensionMismatch(PTError):
    """Operands have incompatible shapes or dimensions."""


class ZeroVector(PTError):
    """A nonzero state vector was required."""


class DegenerateSpectrum(PTError):
    """Eigenvalues coincide, so eigenvectors are not uniquely determined."""


class NotHermitian(PTError):
    """A Hermitian matrix was required."""


class NotDensityMatrix(PTError):
    """A Hermitian, unit-trace (and where required positive) matrix was required."""


class IncompleteBasis(PTError):
    """A spanning or biorthonormal vector system was required."""


class BrokenPTSymmetry(PTError):
    """Hamiltonian parameters lie outside the unbroken-symmetry region."""


class DegenerateGap(PTError):
    """The two real eigenvalues are too close to separate numerically."""


class MetricSingular(PTError):
    """cos(alpha) is too small for the CPT metric to be well conditioned."""


class DenominatorVanishes(PTError):
    """A closed-form denominator is numerically zero at the requested point."""


class InvariantViolation(PTError):
    """An internal cross-check that should hold by construction failed."""
