"""Quantum discord and classical correlations of two-qubit
classical-quantum states, and their evolution under a local
amplitude-damping channel."""

from .channels import (
    KrausPair,
    TrajectoryPoint,
    amplitude_damping,
    apply_channel,
    apply_local,
    p_of_t,
    trajectory,
)
from .correlations import (
    CorrelationReport,
    EllipseDomain,
    MeasurementBasis,
    classical_analytic,
    conditional_entropy_after_measurement,
    delta_tilde,
    discord_analytic,
    discord_numeric,
    ellipse_domain,
    minimize_delta_on_ellipse,
    minimize_delta_on_segment,
    mutual_information,
)
from .errors import (
    DegenerateDomainError,
    DomainError,
    InvalidStateError,
    UnsupportedRegimeError,
)
from .qmat import (
    binary_entropy,
    bloch_to_density,
    density_to_bloch,
    eigvals_hermitian,
    partial_trace,
    pauli,
    tensor,
    validate_density,
    von_neumann_entropy,
)
from .states import (
    CanonicalParams,
    CqCoefficients,
    CqState,
    assemble,
    b92_state,
    canonicalize,
    coefficients,
    plus_minus_state,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalParams",
    "CorrelationReport",
    "CqCoefficients",
    "CqState",
    "DegenerateDomainError",
    "DomainError",
    "EllipseDomain",
    "InvalidStateError",
    "KrausPair",
    "MeasurementBasis",
    "TrajectoryPoint",
    "UnsupportedRegimeError",
    "amplitude_damping",
    "apply_channel",
    "apply_local",
    "assemble",
    "b92_state",
    "binary_entropy",
    "bloch_to_density",
    "canonicalize",
    "classical_analytic",
    "coefficients",
    "conditional_entropy_after_measurement",
    "delta_tilde",
    "density_to_bloch",
    "discord_analytic",
    "discord_numeric",
    "eigvals_hermitian",
    "ellipse_domain",
    "minimize_delta_on_ellipse",
    "minimize_delta_on_segment",
    "mutual_information",
    "p_of_t",
    "partial_trace",
    "pauli",
    "plus_minus_state",
    "tensor",
    "trajectory",
    "validate_density",
    "von_neumann_entropy",
]
