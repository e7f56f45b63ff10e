"""Unbroken PT-symmetric two-level systems and their CPT inner product.

A two-level Hamiltonian

    H = [[r e^{i theta}, s],
         [s,             r e^{-i theta}]]

with real r, s > 0, theta is invariant under combined parity and time
reversal. In the unbroken region s^2 > r^2 sin^2 theta both eigenvalues

    E_pm = r cos theta +/- sqrt(s^2 - r^2 sin^2 theta)

are real, and the non-Hermiticity angle alpha is fixed by
sin(alpha) = (r/s) sin(theta) on the principal branch. The eigenvectors

    psi_plus  = (e^{ i alpha/2}, e^{-i alpha/2}) / sqrt(2 cos alpha)
    psi_minus = (e^{-i alpha/2}, -e^{ i alpha/2}) / sqrt(2 cos alpha)

are orthonormal under the CPT inner product <psi|phi> = [(CPT) psi] . phi,
which this module realises as the metric form psi^dagger eta phi with
eta = transpose(C P), C the conjugation operator, P the swap matrix, and T
acting as entrywise complex conjugation.

Sign convention: with eta = transpose(C P) the computational overlaps come
out as <0|1>_CPT = -i tan(alpha) and <1|0>_CPT = +i tan(alpha). Reduced-state
spectra computed elsewhere in the package are insensitive to this sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BrokenPTSymmetry,
    DegenerateGap,
    DimensionMismatch,
    MetricSingular,
    ZeroVector,
)
from .linalg import EigenSystem, as_complex, matexp_unitary

_COS_FLOOR = 1e-12

_BASIS_TAGS = ("computational", "pt_eigen")


@dataclass(frozen=True)
class PTHamiltonian:
    """A validated unbroken PT-symmetric 2x2 Hamiltonian with derived data."""

    r: float
    s: float
    theta: float
    matrix: np.ndarray
    alpha: float
    e_plus: float
    e_minus: float
    psi_plus: np.ndarray
    psi_minus: np.ndarray


@dataclass(frozen=True)
class CPTMetric:
    """Positive-definite metric eta realising the CPT inner product."""

    alpha: float
    eta: np.ndarray

    @property
    def dim(self) -> int:
        return self.eta.shape[0]


@dataclass(frozen=True)
class PTQubitState:
    """A two-level state, either in computational coordinates or expanded
    over the CPT-orthonormal eigenpair {psi_plus, psi_minus}."""

    amplitudes: np.ndarray
    basis: str = "computational"

    def __post_init__(self):
        amps = as_complex(self.amplitudes)
        if amps.shape != (2,):
            raise DimensionMismatch(f"expected 2 amplitudes, got shape {amps.shape}")
        if not np.any(amps):
            raise ZeroVector("PTQubitState requires a nonzero amplitude vector")
        if self.basis not in _BASIS_TAGS:
            raise ValueError(f"basis must be one of {_BASIS_TAGS}, got {self.basis!r}")
        object.__setattr__(self, "amplitudes", amps)

    def components(self, alpha: float | None = None) -> np.ndarray:
        """Computational-basis coordinates of the state.

        ``alpha`` is required when the state is expanded over the PT
        eigenbasis, since that basis depends on the non-Hermiticity angle.
        """
        if self.basis == "computational":
            return self.amplitudes.copy()
        if alpha is None:
            raise ValueError("alpha is required to expand a pt_eigen state")
        plus, minus = pt_eigenpairs(alpha)
        return self.amplitudes[0] * plus + self.amplitudes[1] * minus


def _cos_alpha(alpha: float) -> float:
    ca = math.cos(alpha)
    if ca < _COS_FLOOR:
        raise MetricSingular(f"cos(alpha) = {ca:.3e} below {_COS_FLOOR:g}")
    return ca


def pt_alpha(r: float, s: float, theta: float) -> float:
    """Non-Hermiticity angle: arcsin(r sin(theta) / s), principal branch.

    Defined only in the unbroken region s^2 > r^2 sin^2 theta, which pins
    the ratio inside (-1, 1) and alpha inside (-pi/2, pi/2).
    """
    rs = r * math.sin(theta)
    if s * s - rs * rs <= 0.0:
        raise BrokenPTSymmetry(
            f"need s^2 > r^2 sin^2(theta): {s * s:.6g} <= {rs * rs:.6g}"
        )
    return math.asin(rs / s)


def pt_eigenpairs(alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """The CPT-orthonormal eigenvector pair (psi_plus, psi_minus) at angle alpha."""
    ca = _cos_alpha(alpha)
    scale = 1.0 / math.sqrt(2.0 * ca)
    half = 0.5j * alpha
    plus = scale * np.array([np.exp(half), np.exp(-half)])
    minus = scale * np.array([np.exp(-half), -np.exp(half)])
    return plus, minus


def make_hamiltonian(r: float, s: float, theta: float) -> PTHamiltonian:
    """Build and validate an unbroken PT-symmetric two-level Hamiltonian.

    Raises BrokenPTSymmetry outside the real-spectrum region and
    DegenerateGap when E_plus - E_minus falls below 1e-12. The coupling s
    must be positive: the eigenvector labelling above pairs psi_plus with
    E_plus only for s > 0, and a negative coupling would silently swap the
    labels.
    """
    rs = r * math.sin(theta)
    disc = s * s - rs * rs
    if disc <= 0.0:
        raise BrokenPTSymmetry(
            f"need s^2 > r^2 sin^2(theta): {s * s:.6g} <= {rs * rs:.6g}"
        )
    if s < 0.0:
        raise ValueError(f"coupling s must be positive, got {s:.6g}")
    root = math.sqrt(disc)
    if 2.0 * root < 1e-12:
        raise DegenerateGap(f"eigenvalue gap {2.0 * root:.3e} below 1e-12")
    alpha = math.asin(rs / s)
    e_plus = r * math.cos(theta) + root
    e_minus = r * math.cos(theta) - root
    psi_plus, psi_minus = pt_eigenpairs(alpha)
    matrix = np.array(
        [
            [r * np.exp(1j * theta), s],
            [s, r * np.exp(-1j * theta)],
        ],
        dtype=np.complex128,
    )
    return PTHamiltonian(
        r=r,
        s=s,
        theta=theta,
        matrix=matrix,
        alpha=alpha,
        e_plus=e_plus,
        e_minus=e_minus,
        psi_plus=psi_plus,
        psi_minus=psi_minus,
    )


def c_operator(alpha: float) -> np.ndarray:
    """Conjugation operator C = [[i sin a, 1], [1, -i sin a]] / cos a.

    Squares to the identity and commutes with every Hamiltonian of angle
    alpha.
    """
    ca = _cos_alpha(alpha)
    sa = math.sin(alpha)
    return np.array([[1j * sa, 1.0], [1.0, -1j * sa]], dtype=np.complex128) / ca


def p_operator() -> np.ndarray:
    """Parity: the swap matrix."""
    return np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)


def t_conjugate(x) -> np.ndarray:
    """Time reversal on finite vectors and matrices: entrywise conjugation."""
    return np.conj(as_complex(x))


def cpt_metric(alpha: float) -> CPTMetric:
    """Metric eta = transpose(C P) such that <psi|phi>_CPT = psi^dagger eta phi.

    eta is Hermitian positive definite for |alpha| < pi/2 and reduces to the
    identity at alpha = 0.
    """
    eta = (c_operator(alpha) @ p_operator()).T
    return CPTMetric(alpha=alpha, eta=eta)


def cpt_inner(psi, phi, metric: CPTMetric) -> complex:
    """CPT inner product, antilinear in the first argument."""
    psi = as_complex(psi)
    phi = as_complex(phi)
    if psi.shape != phi.shape or psi.shape != (metric.dim,):
        raise DimensionMismatch(
            f"vector shapes {psi.shape}, {phi.shape} do not match metric dim {metric.dim}"
        )
    return complex(np.vdot(psi, metric.eta @ phi))


def cpt_norm(psi, metric: CPTMetric) -> float:
    """sqrt(<psi|psi>_CPT); strictly positive for any nonzero vector."""
    psi = as_complex(psi)
    if not np.any(psi):
        raise ZeroVector("cpt_norm requires a nonzero vector")
    value = math.sqrt(max(cpt_inner(psi, psi, metric).real, 0.0))
    if value == 0.0:
        raise ZeroVector("vector underflowed to zero CPT norm")
    return value


def cpt_dual(psi, metric: CPTMetric) -> np.ndarray:
    """Dual vector eta psi, whose conventional pairing with any phi equals
    cpt_inner(psi, phi, metric)."""
    return metric.eta @ as_complex(psi)


def measure_probability(psi, eigenstate, metric: CPTMetric) -> float:
    """Probability of projecting psi onto the given eigenstate.

    |<psi|e>_CPT|^2 / (||psi||^2 ||e||^2), with both norms squared so that
    probabilities over a CPT-orthonormal basis sum to one.
    """
    overlap = cpt_inner(psi, eigenstate, metric)
    np_ = cpt_norm(psi, metric)
    ne = cpt_norm(eigenstate, metric)
    return float(abs(overlap) ** 2 / (np_ * np_ * ne * ne))


def evolution_operator(h: PTHamiltonian, t: float) -> np.ndarray:
    """U(t) = exp(-i H t) from the spectral sum over {psi_n} and their CPT duals.

    CPT-unitary: it preserves cpt_norm at the Hamiltonian's own angle, while
    the conventional norm is generally not preserved when alpha != 0.
    """
    metric = cpt_metric(h.alpha)
    eigensystem = EigenSystem(
        values=np.array([h.e_plus, h.e_minus], dtype=np.complex128),
        right_vectors=np.column_stack([h.psi_plus, h.psi_minus]),
    )
    duals = [cpt_dual(h.psi_plus, metric), cpt_dual(h.psi_minus, metric)]
    return matexp_unitary(h.matrix, eigensystem, duals, t)


def pt_evolve(h: PTHamiltonian, t: float, state) -> np.ndarray:
    """Apply U(t) to a two-level state."""
    state = as_complex(state)
    if state.shape != (2,):
        raise DimensionMismatch(f"expected a 2-vector, got shape {state.shape}")
    if not np.any(state):
        raise ZeroVector("pt_evolve requires a nonzero state")
    return evolution_operator(h, t) @ state


def resolution_of_identity_defect(h: PTHamiltonian) -> float:
    """Max-abs deviation of sum_n |psi_n><psi_n| from the identity, where the
    bras are CPT duals. Zero up to rounding for any valid Hamiltonian."""
    metric = cpt_metric(h.alpha)
    total = np.zeros((2, 2), dtype=np.complex128)
    for psi in (h.psi_plus, h.psi_minus):
        total += np.outer(psi, cpt_dual(psi, metric).conj())
    return float(np.max(np.abs(total - np.eye(2))))
