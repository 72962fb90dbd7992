"""Dense complex linear algebra for one- and two-qubit operators.

Everything here is fixed size (2x2 and 4x4): Pauli matrices, Bloch-vector
conversions, tensor products, partial traces, Hermitian spectra and the two
entropy functions the rest of the package is built on.  All functions are
pure and never mutate their inputs, so values can be shared freely between
concurrent callers.

Entropies are in bits (log base 2) throughout.
"""

from __future__ import annotations

import numpy as np
from scipy.special import xlogy

from .errors import DomainError, InvalidStateError

# Validation tolerances are fixed constants of the library, not knobs.
HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-10
BLOCH_LENGTH_TOL = 1e-10
ENTROPY_INPUT_TOL = 1e-12

_LN2 = np.log(2.0)

_PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)
for _m in _PAULI:
    _m.flags.writeable = False
del _m


def pauli(index: int) -> np.ndarray:
    """Return the identity (index 0) or the Pauli matrix sigma_1..sigma_3."""
    if index not in (0, 1, 2, 3):
        raise DomainError(f"Pauli index must be 0, 1, 2 or 3, got {index!r}")
    return _PAULI[index].copy()


def _as_matrix(m, op: str) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in (2, 4):
        raise DomainError(f"{op} expects a 2x2 or 4x4 matrix, got shape {a.shape}")
    return a


def validate_density(m, dim: int | None = None) -> np.ndarray:
    """Check the density-operator invariants and return the matrix as ndarray.

    Raises InvalidStateError naming the violated invariant (hermiticity,
    unit trace, or positivity); DomainError if the dimension is not the
    requested one.
    """
    a = _as_matrix(m, "validate_density")
    if dim is not None and a.shape[0] != dim:
        raise DomainError(f"expected a {dim}x{dim} density operator, got {a.shape[0]}x{a.shape[0]}")
    herm = np.max(np.abs(a - a.conj().T))
    if herm > HERMITICITY_TOL:
        raise InvalidStateError(f"not Hermitian: max |M - M^dag| = {herm:.3e} exceeds {HERMITICITY_TOL}")
    tr = a.trace()
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"trace not 1: |Tr M - 1| = {abs(tr - 1.0):.3e} exceeds {TRACE_TOL}")
    low = eigvals_hermitian(a)[-1]
    if low < -POSITIVITY_TOL:
        raise InvalidStateError(f"not positive semidefinite: min eigenvalue {low:.3e} below -{POSITIVITY_TOL}")
    return a


def bloch_to_density(s) -> np.ndarray:
    """Single-qubit density operator (1 + s.sigma)/2 for Bloch vector s."""
    v = np.asarray(s, dtype=float)
    if v.shape != (3,):
        raise DomainError(f"Bloch vector must have 3 components, got shape {v.shape}")
    norm = float(np.linalg.norm(v))
    if norm > 1.0 + BLOCH_LENGTH_TOL:
        raise InvalidStateError(f"Bloch vector length {norm} exceeds 1")
    return 0.5 * (_PAULI[0] + v[0] * _PAULI[1] + v[1] * _PAULI[2] + v[2] * _PAULI[3])


def density_to_bloch(tau) -> np.ndarray:
    """Bloch vector s_i = Tr(tau sigma_i) of a single-qubit density operator."""
    a = np.asarray(tau, dtype=complex)
    if a.shape != (2, 2):
        raise DomainError(f"density_to_bloch expects a 2x2 matrix, got shape {a.shape}")
    a = validate_density(a, dim=2)
    return np.array([np.trace(a @ _PAULI[i]).real for i in (1, 2, 3)])


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two single-qubit operators, A the slow factor."""
    ma = np.asarray(a, dtype=complex)
    mb = np.asarray(b, dtype=complex)
    if ma.shape != (2, 2) or mb.shape != (2, 2):
        raise DomainError(f"tensor expects two 2x2 matrices, got {ma.shape} and {mb.shape}")
    return np.kron(ma, mb)


def partial_trace(rho, keep: str) -> np.ndarray:
    """Reduced density operator of a two-qubit state, keeping subsystem A or B."""
    if keep not in ("A", "B"):
        raise DomainError(f"subsystem label must be 'A' or 'B', got {keep!r}")
    a = validate_density(rho, dim=4).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("iaja->ij", a)
    return np.einsum("aiaj->ij", a)


def eigvals_hermitian(m) -> np.ndarray:
    """Real eigenvalues of a 2x2 or 4x4 Hermitian matrix, descending."""
    a = _as_matrix(m, "eigvals_hermitian")
    herm = np.max(np.abs(a - a.conj().T))
    if herm > HERMITICITY_TOL:
        raise DomainError(f"matrix is not Hermitian: max |M - M^dag| = {herm:.3e}")
    if a.shape[0] == 2:
        mean = 0.5 * (a[0, 0].real + a[1, 1].real)
        radius = np.hypot(0.5 * (a[0, 0].real - a[1, 1].real), abs(a[0, 1]))
        return np.array([mean + radius, mean - radius])
    return np.linalg.eigvalsh(a)[::-1].copy()


def binary_entropy(x):
    """Binary Shannon entropy h(x) = -x log2 x - (1-x) log2(1-x), in bits.

    Accepts scalars or arrays.  Inputs within 1e-12 of the [0, 1] boundary
    are clamped; 0 log 0 is 0 by convention, so h(0) = h(1) = 0 exactly.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -ENTROPY_INPUT_TOL) or np.any(arr > 1.0 + ENTROPY_INPUT_TOL):
        raise DomainError("binary_entropy argument outside [0, 1]")
    arr = np.clip(arr, 0.0, 1.0)
    out = -(xlogy(arr, arr) + xlogy(1.0 - arr, 1.0 - arr)) / _LN2
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(out)
    return out


def von_neumann_entropy(rho) -> float:
    """Von Neumann entropy -Tr(rho log2 rho) of a density operator, in bits.

    Eigenvalues in [-1e-10, 0) coming from numerically near-singular states
    are clamped to 0 before taking logs.
    """
    a = validate_density(rho)
    lam = np.clip(eigvals_hermitian(a), 0.0, None)
    return max(float(-xlogy(lam, lam).sum() / _LN2), 0.0)
