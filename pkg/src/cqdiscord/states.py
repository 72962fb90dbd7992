"""Classical-quantum two-qubit states and their canonical parameters.

A classical-quantum state carries a uniformly weighted classical bit on
qubit A and a bit-dependent qubit state on B:

    rho = (|0><0| (x) tau0  +  |1><1| (x) tau1) / 2

Any such state is fully described, up to a local unitary on B, by the Bloch
lengths s0, s1 of tau0 and tau1 and the angle phi between their Bloch
vectors; ``canonicalize`` extracts that triple and ``coefficients`` turns
it into the four Pauli weights of the canonical-frame decomposition

    rho = [1(x)1 + 1(x)(a1 sigma1 + a3 sigma3)
                 + sigma3(x)(b1 sigma1 + b3 sigma3)] / 4.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qmat
from .errors import InvalidStateError

# Assembled states must be block diagonal in the A computational basis.
BLOCK_TOL = 1e-10

_KET0 = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
_KET1 = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class CqState:
    """The pair (tau0, tau1) of single-qubit conditional states."""

    tau0: np.ndarray
    tau1: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "tau0", _frozen(qmat.validate_density(self.tau0, dim=2)))
        object.__setattr__(self, "tau1", _frozen(qmat.validate_density(self.tau1, dim=2)))

    @classmethod
    def from_bloch(cls, bloch0, bloch1) -> "CqState":
        return cls(qmat.bloch_to_density(bloch0), qmat.bloch_to_density(bloch1))

    @classmethod
    def from_assembled(cls, rho) -> "CqState":
        """Split a block-diagonal two-qubit state back into (tau0, tau1)."""
        a = qmat.validate_density(rho, dim=4)
        off = max(np.max(np.abs(a[:2, 2:])), np.max(np.abs(a[2:, :2])))
        if off > BLOCK_TOL:
            raise InvalidStateError(
                f"not a classical-quantum state: off-diagonal A block has magnitude {off:.3e}"
            )
        return cls(2.0 * a[:2, :2], 2.0 * a[2:, 2:])


@dataclass(frozen=True)
class CanonicalParams:
    """Bloch lengths of tau0/tau1 and the angle between their Bloch vectors."""

    s0: float
    s1: float
    phi: float


@dataclass(frozen=True)
class CqCoefficients:
    """Pauli weights of the canonical-frame decomposition; a1 = -b1."""

    a1: float
    a3: float
    b1: float
    b3: float


def assemble(cq: CqState) -> np.ndarray:
    """The 4x4 density operator (|0><0| (x) tau0 + |1><1| (x) tau1)/2."""
    return 0.5 * (np.kron(_KET0, cq.tau0) + np.kron(_KET1, cq.tau1))


def canonicalize(cq: CqState) -> CanonicalParams:
    """Extract (s0, s1, phi) from a classical-quantum state.

    The result is invariant under applying one common unitary to both taus.
    If either Bloch vector has zero length the angle is defined as 0; the
    dot product is clamped to [-1, 1] before the arc cosine so that aligned
    and anti-aligned vectors are safe.
    """
    v0 = qmat.density_to_bloch(cq.tau0)
    v1 = qmat.density_to_bloch(cq.tau1)
    s0 = float(np.linalg.norm(v0))
    s1 = float(np.linalg.norm(v1))
    if s0 == 0.0 or s1 == 0.0:
        return CanonicalParams(s0, s1, 0.0)
    cosang = float(np.clip(np.dot(v0, v1) / (s0 * s1), -1.0, 1.0))
    return CanonicalParams(s0, s1, float(np.arccos(cosang)))


def coefficients(params: CanonicalParams) -> CqCoefficients:
    """Pauli weights (a1, a3, b1, b3) of the canonical decomposition."""
    a1 = params.s1 * np.sin(params.phi) / 2.0
    a3 = (params.s0 + params.s1 * np.cos(params.phi)) / 2.0
    b3 = (params.s0 - params.s1 * np.cos(params.phi)) / 2.0
    return CqCoefficients(float(a1), float(a3), float(-a1), float(b3))


def plus_minus_state() -> CqState:
    """tau0 = |+><+|, tau1 = |-><-|: classically correlated, zero discord."""
    return CqState.from_bloch([1.0, 0.0, 0.0], [-1.0, 0.0, 0.0])


def b92_state() -> CqState:
    """tau0 = |0><0|, tau1 = |+><+|: the B92 protocol resource state."""
    return CqState.from_bloch([0.0, 0.0, 1.0], [1.0, 0.0, 0.0])
