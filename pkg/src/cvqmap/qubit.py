"""Two-qubit density matrices: validation, negativity, entropies, marginals.

Basis order is {|00>, |01>, |10>, |11>} with qubit A the left tensor factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidInputError

__all__ = [
    "TwoQubitState",
    "XState",
    "negativity",
    "linear_entropy",
    "marginals",
    "werner",
    "product_boundary_state",
    "trace_distance",
]

_HERM_TOL = 1e-12
_TRACE_TOL = 1e-12
_EIG_TOL = 1e-10


@dataclass(frozen=True)
class TwoQubitState:
    """4x4 Hermitian unit-trace density matrix of two qubits."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise InvalidInputError(f"expected 4x4 matrix, got {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidInputError("non-finite matrix entries")
        if np.abs(m - m.conj().T).max() > _HERM_TOL:
            raise InvalidInputError("matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > _TRACE_TOL or abs(np.trace(m).imag) > _TRACE_TOL:
            raise InvalidInputError("matrix does not have unit trace")
        if np.linalg.eigvalsh(m).min() < -_EIG_TOL:
            raise InvalidInputError("matrix has a negative eigenvalue")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class XState:
    """Two-qubit X state: four populations and two real coherences.

    coherence_outer is the |00><11| entry, coherence_inner the |01><10| one.
    """

    populations: tuple[float, float, float, float]
    coherence_outer: float
    coherence_inner: float

    def __post_init__(self):
        p = self.populations
        if len(p) != 4 or not all(math.isfinite(x) for x in p):
            raise InvalidInputError(f"bad populations: {p}")
        if abs(sum(p) - 1.0) > 1e-10:
            raise InvalidInputError(f"populations sum to {sum(p)}, not 1")
        if self.coherence_outer**2 > p[0] * p[3] + 1e-10:
            raise InvalidInputError("outer 2x2 block is not positive semidefinite")
        if self.coherence_inner**2 > p[1] * p[2] + 1e-10:
            raise InvalidInputError("inner 2x2 block is not positive semidefinite")

    def matrix(self) -> np.ndarray:
        p = self.populations
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = p
        m[0, 3] = m[3, 0] = self.coherence_outer
        m[1, 2] = m[2, 1] = self.coherence_inner
        return m

    def to_state(self) -> TwoQubitState:
        return TwoQubitState(self.matrix())


def _as_matrix(rho) -> np.ndarray:
    if isinstance(rho, TwoQubitState):
        return rho.matrix
    if isinstance(rho, XState):
        return rho.matrix()
    return np.asarray(rho, dtype=complex)


def partial_transpose(rho) -> np.ndarray:
    """Partial transpose over qubit A."""
    m = _as_matrix(rho)
    return m.reshape(2, 2, 2, 2).transpose(2, 1, 0, 3).reshape(4, 4)


def negativity(rho) -> float:
    """Trace-norm excess of the partial transpose, clamped at zero.

    Eigenvalues are used raw (no clamping) so near-boundary states are not
    biased toward entanglement or separability.
    """
    ev = np.linalg.eigvalsh(partial_transpose(rho))
    return max(0.0, float(np.abs(ev).sum()) - 1.0)


def linear_entropy(rho) -> float:
    """Normalized linear entropy [D/(D-1)](1 - Tr rho^2), D = 2 or 4."""
    m = _as_matrix(rho)
    dim = m.shape[0]
    if dim not in (2, 4):
        raise InvalidInputError(f"expected a 2x2 or 4x4 matrix, got {m.shape}")
    purity = float(np.einsum("ij,ji->", m, m).real)
    return dim / (dim - 1.0) * (1.0 - purity)


def marginals(rho) -> tuple[np.ndarray, np.ndarray]:
    """Partial traces (over B, over A) as 2x2 matrices."""
    m = _as_matrix(rho).reshape(2, 2, 2, 2)
    rho_a = np.einsum("ikjk->ij", m)
    rho_b = np.einsum("kikj->ij", m)
    return rho_a, rho_b


def werner(p: float) -> TwoQubitState:
    """Werner state p|Phi-><Phi-| + (1-p) I/4, |Phi-> = (|00>-|11>)/sqrt(2)."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"Werner weight p={p} outside [0, 1]")
    phi = np.zeros(4, dtype=complex)
    phi[0] = 1.0 / math.sqrt(2.0)
    phi[3] = -1.0 / math.sqrt(2.0)
    return TwoQubitState(p * np.outer(phi, phi.conj()) + (1.0 - p) * np.eye(4) / 4.0)


def product_boundary_state(g: float) -> TwoQubitState:
    """Diagonal product state [(g-1)|01><01| + (g+1)|11><11|]/(2g).

    Attains the minimum two-qubit global entropy at resource purity
    parameter g; its linear entropy is 2(g^2 - 1)/(3 g^2).
    """
    if g < 1.0:
        raise DomainError(f"purity parameter g={g} must be >= 1")
    m = np.zeros((4, 4), dtype=complex)
    m[1, 1] = (g - 1.0) / (2.0 * g)
    m[3, 3] = (g + 1.0) / (2.0 * g)
    return TwoQubitState(m)


def trace_distance(rho, sigma) -> float:
    """Half the trace norm of the difference of two Hermitian matrices."""
    ev = np.linalg.eigvalsh(_as_matrix(rho) - _as_matrix(sigma))
    return 0.5 * float(np.abs(ev).sum())
