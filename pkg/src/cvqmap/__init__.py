"""Dissipative interface from two-mode Gaussian light to two remote qubits."""

__version__ = "0.1.0"

from .gaussian import (
    EntropicParams,
    StandardFormCM,
    from_entropic_params,
    gaussian_entropies,
    gaussian_negativity,
    ptranspose_min_symplectic,
    region_check,
    to_entropic_params,
    validate_cm,
)
from .interface import (
    CoefficientMatrix,
    Trajectory,
    evolve,
    kossakowski,
    mapped_global_entropy,
    mapped_marginal_entropy,
    mapped_negativity,
    steady_state,
)
from .qubit import TwoQubitState, XState, linear_entropy, marginals, negativity, werner

__all__ = [
    "__version__",
    "EntropicParams",
    "StandardFormCM",
    "from_entropic_params",
    "gaussian_entropies",
    "gaussian_negativity",
    "ptranspose_min_symplectic",
    "region_check",
    "to_entropic_params",
    "validate_cm",
    "CoefficientMatrix",
    "Trajectory",
    "evolve",
    "kossakowski",
    "mapped_global_entropy",
    "mapped_marginal_entropy",
    "mapped_negativity",
    "steady_state",
    "TwoQubitState",
    "XState",
    "linear_entropy",
    "marginals",
    "negativity",
    "werner",
]
