"""Bipartite 2x2 states, partial traces in two inner-product worlds, and
entanglement entropy.

Component ordering is first-subsystem-major throughout: amplitude index
2*a + b carries subsystem A in `a` and subsystem B in `b`. Convention drift
here is the classic partial-trace bug, so the ordering is fixed once and
covered by round-trip tests.

Two partial traces are provided. The conventional one contracts A with
ordinary bras and never reacts to anything A does locally. The CPT variant
takes A's overlaps in the CPT inner product instead, which makes B's reduced
state depend on A's metric; its output is renormalized to unit conventional
trace since the B side stays in ordinary quantum mechanics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    IncompleteBasis,
    InvariantViolation,
    ZeroVector,
)
from .linalg import (
    CHECK_TOL,
    as_complex,
    dagger,
    eig_hermitian,
    tensor,
    trace_distance,
    von_neumann_entropy,
)
from .ptcore import CPTMetric, cpt_inner


@dataclass(frozen=True)
class BipartiteState:
    """Pure state vector on a 2 (x) 2 tensor space with subsystem labels.

    The conventional norm is stored alongside so callers can decide when to
    renormalize; the amplitudes themselves are kept exactly as given.
    """

    amplitudes: np.ndarray
    label_a: str = "A"
    label_b: str = "B"
    conventional_norm: float = field(init=False)

    def __post_init__(self):
        amps = as_complex(self.amplitudes)
        if amps.shape != (4,):
            raise DimensionMismatch(f"expected 4 amplitudes, got shape {amps.shape}")
        if not np.any(amps):
            raise ZeroVector("BipartiteState requires a nonzero amplitude vector")
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "conventional_norm", float(np.linalg.norm(amps)))

    def coefficient_matrix(self) -> np.ndarray:
        """Amplitudes as a 2x2 matrix, row = A index, column = B index."""
        return self.amplitudes.reshape(2, 2).copy()

    def normalized(self) -> np.ndarray:
        return self.amplitudes / self.conventional_norm


@dataclass(frozen=True)
class EntanglementReport:
    """Spectrum-level summary of a one-qubit reduced state."""

    reduced_state: np.ndarray
    eigenvalues: tuple[float, float]
    entropy_bits: float
    trace_distance_to_mixed: float
    world_tag: str  # "conventional" or "cpt_alice"


def bell_state() -> BipartiteState:
    """(|00> + |11>) / sqrt(2)."""
    return BipartiteState(np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2.0))


def singlet_state() -> BipartiteState:
    """(|01> - |10>) / sqrt(2)."""
    return BipartiteState(np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0))


def joint_cpt_inner(
    psi: BipartiteState, phi: BipartiteState, metric_a: CPTMetric, metric_b: CPTMetric
) -> complex:
    """Sesquilinear form under eta_a (x) eta_b, the inner product the two
    single-system CPT structures induce on the joint space."""
    a = psi.amplitudes
    b = phi.amplitudes
    if a.shape != (4,) or b.shape != (4,):
        raise DimensionMismatch("joint_cpt_inner requires dim-4 states")
    eta = tensor(metric_a.eta, metric_b.eta)
    return complex(np.vdot(a, eta @ b))


def partial_trace_conventional(rho_ab, traced: str = "A") -> np.ndarray:
    """Conventional partial trace of a two-qubit density matrix.

    Implemented as the Kraus sum sum_i E_i rho E_i^dagger with E_i the
    computational-basis bra on the traced side tensored with the identity.
    """
    rho = as_complex(rho_ab)
    if rho.shape != (4, 4):
        raise DimensionMismatch(f"expected a 4x4 matrix, got shape {rho.shape}")
    from .linalg import _require_density  # shared precondition check

    _require_density(rho, "rho_ab")
    if traced not in ("A", "B"):
        raise ValueError(f"traced must be 'A' or 'B', got {traced!r}")
    eye = np.eye(2, dtype=np.complex128)
    out = np.zeros((2, 2), dtype=np.complex128)
    for i in range(2):
        bra = np.zeros((1, 2), dtype=np.complex128)
        bra[0, i] = 1.0
        e_i = np.kron(bra, eye) if traced == "A" else np.kron(eye, bra)
        out += e_i @ rho @ dagger(e_i)
    return out


def partial_trace_cpt(
    psi: BipartiteState, metric_a: CPTMetric, basis_a
) -> np.ndarray:
    """B's reduced operator when A's overlaps are taken in the CPT inner product.

    The state is expanded over the given A basis {a_0, a_1} as
    psi = sum_i a_i (x) chi_i, and

        rho_B = sum_ij <a_j | a_i>_CPT  chi_i chi_j^dagger,

    renormalized to unit conventional trace. The result is independent of
    which spanning basis is supplied.
    """
    a0, a1 = (as_complex(v) for v in basis_a)
    if a0.shape != (2,) or a1.shape != (2,):
        raise DimensionMismatch("basis_a must contain two 2-vectors")
    basis = np.column_stack([a0, a1])
    if abs(np.linalg.det(basis)) < 1e-12:
        raise IncompleteBasis("basis_a does not span the A subsystem")
    # Rows of chi are B-side component vectors: coefficient_matrix = basis @ chi.
    chi = np.linalg.solve(basis, psi.coefficient_matrix())
    gram = np.empty((2, 2), dtype=np.complex128)
    for j in range(2):
        for i in range(2):
            gram[j, i] = cpt_inner(basis[:, j], basis[:, i], metric_a)
    rho = np.zeros((2, 2), dtype=np.complex128)
    for i in range(2):
        for j in range(2):
            rho += gram[j, i] * np.outer(chi[i], chi[j].conj())
    tr = np.trace(rho).real
    if tr <= 0.0:
        raise InvariantViolation(f"CPT-traced state has nonpositive trace {tr:.3e}")
    return rho / tr


def density_report(rho, world_tag: str) -> EntanglementReport:
    """Diagnose a one-qubit density matrix: spectrum, entropy in bits, and
    trace distance to the maximally mixed state."""
    rho = as_complex(rho)
    system = eig_hermitian(rho)
    lam = system.values.real
    if abs(lam.sum() - 1.0) > CHECK_TOL:
        raise InvariantViolation(f"reduced-state eigenvalues sum to {lam.sum():.12g}")
    return EntanglementReport(
        reduced_state=rho,
        eigenvalues=(float(lam[0]), float(lam[1])),
        entropy_bits=von_neumann_entropy(rho),
        trace_distance_to_mixed=trace_distance(rho, np.eye(2) / 2.0),
        world_tag=world_tag,
    )


def entanglement_entropy(psi: BipartiteState) -> EntanglementReport:
    """Entanglement of a pure bipartite state: entropy of B's reduced matrix.

    The input is conventionally normalized before tracing. The A-side and
    B-side entropies agree for any pure state; that symmetry is re-checked
    here and a failure raises InvariantViolation.
    """
    amps = psi.normalized()
    rho_ab = np.outer(amps, amps.conj())
    rho_b = partial_trace_conventional(rho_ab, traced="A")
    rho_a = partial_trace_conventional(rho_ab, traced="B")
    s_b = von_neumann_entropy(rho_b)
    s_a = von_neumann_entropy(rho_a)
    if abs(s_a - s_b) > CHECK_TOL:
        raise InvariantViolation(
            f"subsystem entropies disagree: {s_a:.12g} vs {s_b:.12g}"
        )
    return density_report(rho_b, world_tag="conventional")
