"""Local amplitude-damping channel and the induced Bloch-vector trajectory.

The channel is Markovian: damping for a time t with rate gamma gives
p = 1 - exp(-gamma t), and damping with p1 followed by p2 equals a single
application with p1 + p2 - p1*p2.  ``apply_local`` is generic over any
two-operator Kraus pair so other single-qubit channels can be plugged in,
but only amplitude damping ships.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qmat
from .errors import DomainError

COMPLETENESS_TOL = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class KrausPair:
    """Two Kraus operators E0, E1 with E0^dag E0 + E1^dag E1 = 1."""

    e0: np.ndarray
    e1: np.ndarray
    p: float

    def __post_init__(self):
        e0 = np.asarray(self.e0, dtype=complex)
        e1 = np.asarray(self.e1, dtype=complex)
        if e0.shape != (2, 2) or e1.shape != (2, 2):
            raise DomainError("Kraus operators must be 2x2")
        gap = np.max(np.abs(e0.conj().T @ e0 + e1.conj().T @ e1 - np.eye(2)))
        if gap > COMPLETENESS_TOL:
            raise DomainError(f"Kraus pair is not trace preserving: completeness gap {gap:.3e}")
        object.__setattr__(self, "e0", _frozen(e0))
        object.__setattr__(self, "e1", _frozen(e1))


@dataclass(frozen=True)
class TrajectoryPoint:
    """Damped image of the +/- X-axis Bloch vectors at damping p."""

    p: float
    s: float
    phi: float
    bloch_plus: np.ndarray
    bloch_minus: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "bloch_plus", _frozen(np.asarray(self.bloch_plus, dtype=float)))
        object.__setattr__(self, "bloch_minus", _frozen(np.asarray(self.bloch_minus, dtype=float)))


def amplitude_damping(p: float) -> KrausPair:
    """Kraus pair E0 = |0><0| + sqrt(1-p)|1><1|, E1 = sqrt(p)|0><1|."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"damping probability must lie in [0, 1], got {p!r}")
    e0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - p)]], dtype=complex)
    e1 = np.array([[0.0, np.sqrt(p)], [0.0, 0.0]], dtype=complex)
    return KrausPair(e0, e1, float(p))


def p_of_t(gamma: float, t: float) -> float:
    """Damping probability 1 - exp(-gamma t) after time t at rate gamma."""
    if gamma < 0.0 or t < 0.0:
        raise DomainError("gamma and t must be non-negative")
    return float(-np.expm1(-gamma * t))


def apply_channel(rho, kraus: KrausPair) -> np.ndarray:
    """Apply a Kraus pair to a single-qubit state: E0 rho E0^dag + E1 rho E1^dag."""
    a = qmat.validate_density(rho, dim=2)
    return kraus.e0 @ a @ kraus.e0.conj().T + kraus.e1 @ a @ kraus.e1.conj().T


def apply_local(rho, kraus: KrausPair, target: str) -> np.ndarray:
    """Apply a Kraus pair to one qubit of a two-qubit state.

    For target 'B' the operators act as 1 (x) E_k, for 'A' as E_k (x) 1.
    Trace and positivity are preserved.
    """
    if target not in ("A", "B"):
        raise DomainError(f"subsystem label must be 'A' or 'B', got {target!r}")
    a = qmat.validate_density(rho, dim=4)
    eye = np.eye(2, dtype=complex)
    out = np.zeros((4, 4), dtype=complex)
    for e in (kraus.e0, kraus.e1):
        k = np.kron(eye, e) if target == "B" else np.kron(e, eye)
        out += k @ a @ k.conj().T
    return out


def trajectory(p: float) -> TrajectoryPoint:
    """Closed form for the damped +/- X-axis pair.

    Both Bloch vectors keep a common length s(p) = sqrt(1 + p(p-1)) while
    the angle between them shrinks from pi to 0 as
    phi(p) = pi - 2 arctan(p / sqrt(1-p)); phi(1) = 0 by continuity.
    """
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"damping probability must lie in [0, 1], got {p!r}")
    s = float(np.sqrt(1.0 + p * (p - 1.0)))
    phi = 0.0 if p == 1.0 else float(np.pi - 2.0 * np.arctan(p / np.sqrt(1.0 - p)))
    x = float(np.sqrt(1.0 - p))
    return TrajectoryPoint(
        p=float(p),
        s=s,
        phi=phi,
        bloch_plus=np.array([x, 0.0, p]),
        bloch_minus=np.array([-x, 0.0, p]),
    )
