"""Dense complex linear algebra for two- and four-level quantum problems.

Everything operates on plain numpy arrays of complex128. Matrices are square
with row-major index semantics, and tensor products put the first factor's
index in the major position: (a (x) b)[i*dim_b + k, j*dim_b + l] = a[i,j]*b[k,l].

Comparisons are absolute-tolerance based. CHECK_TOL guards preconditions and
numeric cross-checks; EXACT_TOL is for identities that closed-form 2x2
arithmetic satisfies to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSpectrum,
    DimensionMismatch,
    IncompleteBasis,
    NotDensityMatrix,
    NotHermitian,
)

CHECK_TOL = 1e-10
EXACT_TOL = 1e-12

# Components smaller than this are treated as zero when fixing eigenvector phase.
_PHASE_TOL = 1e-10


def as_complex(x) -> np.ndarray:
    return np.asarray(x, dtype=np.complex128)


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return as_complex(m).conj().T


def allclose(a, b, tol: float = CHECK_TOL) -> bool:
    """Entrywise equality within an absolute tolerance (no relative part)."""
    return bool(np.all(np.abs(as_complex(a) - as_complex(b)) <= tol))


def is_hermitian(m, tol: float = CHECK_TOL) -> bool:
    m = as_complex(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and allclose(m, dagger(m), tol)


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two vectors or two square matrices.

    The first operand's indices are major, so tensor(x, y) of basis vectors
    e_i and e_k lands on index i*dim(y) + k.
    """
    a = as_complex(a)
    b = as_complex(b)
    if a.ndim != b.ndim or a.ndim not in (1, 2):
        raise DimensionMismatch(
            "tensor operands must both be vectors or both be square matrices"
        )
    if a.ndim == 2 and (a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]):
        raise DimensionMismatch("tensor requires square matrix operands")
    return np.kron(a, b)


@dataclass(frozen=True)
class EigenSystem:
    """Right eigenpairs ordered by descending real part (ties broken by
    descending imaginary part).

    ``right_vectors`` holds one unit-norm eigenvector per column; column j
    pairs with ``values[j]``. Each vector's first non-negligible component is
    made real positive so comparisons are gauge free.
    """

    values: np.ndarray
    right_vectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.values)


def _phase_fixed(v: np.ndarray) -> np.ndarray:
    for comp in v:
        if abs(comp) > _PHASE_TOL:
            return v * (comp.conjugate() / abs(comp))
    return v


def _descending_order(values: np.ndarray) -> np.ndarray:
    return np.lexsort((-values.imag, -values.real))


def eig_general_2x2(m) -> EigenSystem:
    """Eigen decomposition of a general (possibly non-Hermitian) 2x2 matrix.

    Uses the closed-form characteristic-polynomial roots from trace and
    determinant. Right eigenvectors are normalized in the conventional norm.

    Raises DegenerateSpectrum when the two roots are closer than 1e-12,
    since the eigenvectors are then not uniquely determined.
    """
    m = as_complex(m)
    if m.shape != (2, 2):
        raise DimensionMismatch(f"expected a 2x2 matrix, got shape {m.shape}")
    tr = m[0, 0] + m[1, 1]
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    disc = np.sqrt(complex(tr * tr - 4.0 * det))
    roots = np.array([(tr + disc) / 2.0, (tr - disc) / 2.0])
    if abs(roots[0] - roots[1]) < 1e-12:
        raise DegenerateSpectrum(
            f"eigenvalue gap {abs(roots[0] - roots[1]):.3e} below 1e-12"
        )
    order = _descending_order(roots)
    roots = roots[order]

    vectors = np.empty((2, 2), dtype=np.complex128)
    for j, lam in enumerate(roots):
        # Either row of (m - lam I) yields a null vector; take the better
        # conditioned of the two candidates.
        cand_top = np.array([m[0, 1], lam - m[0, 0]])
        cand_bot = np.array([lam - m[1, 1], m[1, 0]])
        v = cand_top if np.linalg.norm(cand_top) >= np.linalg.norm(cand_bot) else cand_bot
        if np.linalg.norm(v) == 0.0:
            # Diagonal matrix: the null vector is a basis vector.
            v = np.array([1.0, 0.0]) if abs(m[0, 0] - lam) <= abs(m[1, 1] - lam) else np.array([0.0, 1.0])
        v = as_complex(v)
        v = v / np.linalg.norm(v)
        vectors[:, j] = _phase_fixed(v)
    return EigenSystem(values=roots, right_vectors=vectors)


def eig_hermitian(m) -> EigenSystem:
    """Eigen decomposition of a Hermitian matrix, eigenvalues descending.

    Raises NotHermitian when the input deviates from its conjugate transpose
    by more than CHECK_TOL.
    """
    m = as_complex(m)
    if not is_hermitian(m):
        raise NotHermitian("matrix is not Hermitian within 1e-10")
    w, v = np.linalg.eigh((m + dagger(m)) / 2.0)
    order = np.argsort(w)[::-1]
    w = w[order]
    v = v[:, order]
    for j in range(v.shape[1]):
        v[:, j] = _phase_fixed(v[:, j])
    return EigenSystem(values=w.astype(np.complex128), right_vectors=v)


def matexp_unitary(h, eigensystem: EigenSystem, dual_vectors, t: float) -> np.ndarray:
    """Evolution operator exp(-i h t) built from a biorthogonal eigensystem.

    U(t) = sum_n exp(-i E_n t) |v_n><d_n| where the dual vectors satisfy
    <d_i, v_j> = delta_ij in the conventional inner product. For a Hermitian
    h with orthonormal eigenvectors the duals are the eigenvectors themselves
    and U(t) is conventionally unitary.
    """
    h = as_complex(h)
    n = h.shape[0]
    v = eigensystem.right_vectors
    if v.shape != (n, n) or eigensystem.dim != n or len(dual_vectors) != n:
        raise IncompleteBasis(
            f"need {n} eigenvectors and {n} dual vectors for a dim-{n} operator"
        )
    w = np.column_stack([as_complex(d) for d in dual_vectors])
    gram = dagger(w) @ v
    if not allclose(gram, np.eye(n), CHECK_TOL):
        raise IncompleteBasis(
            f"dual pairing deviates from identity by {np.max(np.abs(gram - np.eye(n))):.3e}"
        )
    phases = np.exp(-1j * eigensystem.values * t)
    return (v * phases) @ dagger(w)


def _require_density(m: np.ndarray, name: str) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotDensityMatrix(f"{name} must be a square matrix")
    if not is_hermitian(m):
        raise NotDensityMatrix(f"{name} is not Hermitian within 1e-10")
    if abs(np.trace(m) - 1.0) > CHECK_TOL:
        raise NotDensityMatrix(f"{name} has trace {np.trace(m):.12g}, expected 1")


def von_neumann_entropy(rho, log_base: float = 2.0) -> float:
    """-sum_i lambda_i log(lambda_i) with 0 log 0 = 0, in the given log base.

    Requires a Hermitian unit-trace matrix whose eigenvalues are no more
    negative than -1e-10 (rounding slack); anything worse raises
    NotDensityMatrix.
    """
    if log_base <= 0.0 or log_base == 1.0:
        raise ValueError(f"log_base must be positive and != 1, got {log_base}")
    rho = as_complex(rho)
    _require_density(rho, "rho")
    lam = np.linalg.eigvalsh((rho + dagger(rho)) / 2.0)
    if lam.min() < -CHECK_TOL:
        raise NotDensityMatrix(f"rho has negative eigenvalue {lam.min():.3e}")
    lam = lam[lam > 0.0]
    return float(-np.sum(lam * np.log(lam)) / math.log(log_base))


def trace_distance(rho, sigma) -> float:
    """Half the sum of absolute eigenvalues of (rho - sigma)."""
    rho = as_complex(rho)
    sigma = as_complex(sigma)
    if rho.shape != sigma.shape:
        raise DimensionMismatch(f"shape mismatch {rho.shape} vs {sigma.shape}")
    _require_density(rho, "rho")
    _require_density(sigma, "sigma")
    diff = rho - sigma
    lam = np.linalg.eigvalsh((diff + dagger(diff)) / 2.0)
    return float(0.5 * np.sum(np.abs(lam)))
