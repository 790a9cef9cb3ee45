"""The dissipative map from a two-mode Gaussian resource to two qubits.

Builds the Kossakowski coefficient matrix gamma*(V12 + i*Omega), evaluates
the closed-form steady state and its entanglement/mixedness diagnostics,
and integrates the master equation, whose generator preserves the X block
of the density matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import DegenerateResourceError, DomainError, IntegrationError
from .gaussian import OMEGA, StandardFormCM
from .qubit import TwoQubitState, XState, linear_entropy, negativity

__all__ = [
    "CoefficientMatrix",
    "Trajectory",
    "kossakowski",
    "liouvillian",
    "steady_state",
    "mapped_negativity",
    "mapped_global_entropy",
    "mapped_marginal_entropy",
    "bloch_rhs",
    "evolve",
    "relax_to_steady_state",
    "anti_x_norm",
    "trajectory_rows",
]

_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_I2 = np.eye(2, dtype=complex)

# Lindblad operators: sigma_x/sigma_y on qubit A, then on qubit B.
_OPS = (
    np.kron(_SX, _I2),
    np.kron(_SY, _I2),
    np.kron(_I2, _SX),
    np.kron(_I2, _SY),
)

_ANTI_X_MASK = np.array(
    [
        [False, True, True, False],
        [True, False, False, True],
        [True, False, False, True],
        [False, True, True, False],
    ]
)


@dataclass(frozen=True)
class CoefficientMatrix:
    """Kossakowski matrix gamma*(V12 + i*Omega) of the Lindblad generator."""

    d: np.ndarray
    gamma: float

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.d).min())


@dataclass(frozen=True)
class Trajectory:
    """Master-equation solution sampled on a time grid.

    Times are dimensionless tau multiplied by 1/gamma, so gamma only
    rescales the reported axis; the states themselves are gamma-independent.
    """

    times: np.ndarray
    states: list[TwoQubitState]
    resource: StandardFormCM
    gamma: float


def kossakowski(cm: StandardFormCM, gamma: float = 1.0) -> CoefficientMatrix:
    """Coefficient matrix of the master equation for the given resource."""
    if gamma <= 0.0:
        raise DomainError(f"gamma={gamma} must be positive")
    return CoefficientMatrix(d=gamma * (cm.matrix() + 1j * OMEGA), gamma=gamma)


def liouvillian(cm: StandardFormCM) -> np.ndarray:
    """16x16 generator acting on vec(rho), in dimensionless time tau."""
    d = cm.matrix() + 1j * OMEGA
    eye = np.eye(4, dtype=complex)
    lv = np.zeros((16, 16), dtype=complex)
    for j in range(4):
        for k in range(4):
            if d[j, k] == 0:
                continue
            okj = _OPS[k] @ _OPS[j]
            lv += d[j, k] * (
                np.kron(_OPS[j], _OPS[k].T)
                - 0.5 * np.kron(okj, eye)
                - 0.5 * np.kron(eye, okj.T)
            )
    return lv


def _z_delta(cm: StandardFormCM) -> tuple[float, float]:
    z = (cm.a + cm.b) ** 2 - 2.0 * (cm.c_plus**2 + cm.c_minus**2)
    if z <= 1e-12:
        raise DegenerateResourceError(f"steady-state normalization z={z} <= 0")
    return z, 4.0 * cm.a * cm.b * z


def steady_state(cm: StandardFormCM) -> XState:
    """Closed-form fixed point of the master equation."""
    a, b = cm.a, cm.b
    cp, cm_ = cm.c_plus, cm.c_minus
    z, delta = _z_delta(cm)
    ss = (a + b) ** 2
    p00 = ((a * b - a - b) * z + ss) / delta
    p01 = p00 + 2.0 * (a * z - ss) / delta
    p10 = p00 + 2.0 * (b * z - ss) / delta
    p11 = 1.0 - p00 - p01 - p10
    return XState(
        populations=(p00, p01, p10, p11),
        coherence_outer=2.0 * (a + b) * (cm_ - cp) / delta,
        coherence_inner=2.0 * (a + b) * (cm_ + cp) / delta,
    )


def mapped_negativity(cm: StandardFormCM) -> float:
    """Steady-state two-qubit negativity, in closed form.

    mu is evaluated as sqrt(z^2 (a-b)^2 + 4 (a+b)^2 (c+ - c-)^2), which is
    finite and even in a - b (the eta-based factorization has a removable
    singularity at a = b).
    """
    a, b = cm.a, cm.b
    z, delta = _z_delta(cm)
    mu = math.sqrt(
        z * z * (a - b) ** 2 + 4.0 * (a + b) ** 2 * (cm.c_plus - cm.c_minus) ** 2
    )
    return max(0.0, (2.0 / delta) * ((a + b) ** 2 - delta / 4.0 + mu))


def mapped_global_entropy(cm: StandardFormCM) -> float:
    """Steady-state two-qubit global linear entropy, in closed form."""
    a, b = cm.a, cm.b
    _, delta = _z_delta(cm)
    xi2 = (a + b) ** 2 + 4.0 * (cm.c_plus**2 + cm.c_minus**2)
    return (
        1.0
        - 1.0 / (3.0 * a * a)
        - 1.0 / (3.0 * b * b)
        - 16.0 * (a + b) ** 2 * xi2 / (3.0 * delta * delta)
    )


def mapped_marginal_entropy(marginal_field_entropy: float) -> float:
    """Marginal-entropy transfer law: S_qubit = S_field (2 - S_field)."""
    if not 0.0 <= marginal_field_entropy < 1.0:
        raise DomainError(f"marginal entropy {marginal_field_entropy} outside [0, 1)")
    return marginal_field_entropy * (2.0 - marginal_field_entropy)


def bloch_rhs(x: XState, cm: StandardFormCM) -> tuple[np.ndarray, float, float]:
    """Closed ODE on the X-block coordinates, in dimensionless tau.

    Returns (d populations, d outer coherence, d inner coherence).  The
    imaginary parts of the coherences decouple and decay at rate 2(a+b),
    so real-coherence X states stay real for all times.
    """
    a, b = cm.a, cm.b
    cd = cm.c_minus - cm.c_plus
    cs = cm.c_minus + cm.c_plus
    p00, p01, p10, p11 = x.populations
    u, v = x.coherence_outer, x.coherence_inner
    coh = 2.0 * cd * u + 2.0 * cs * v
    dp00 = -2.0 * a * (p00 - p10) - 2.0 * b * (p00 - p01) + coh - 4.0 * p00 - 2.0 * p01 - 2.0 * p10
    dp01 = -2.0 * a * (p01 - p11) + 2.0 * b * (p00 - p01) - coh + 2.0 * p00 - 2.0 * p11
    dp10 = 2.0 * a * (p00 - p10) - 2.0 * b * (p10 - p11) - coh + 2.0 * p00 - 2.0 * p11
    dp11 = 2.0 * a * (p01 - p11) + 2.0 * b * (p10 - p11) + coh + 2.0 * p01 + 2.0 * p10 + 4.0 * p11
    quad = p00 - p01 - p10 + p11
    du = -2.0 * (a + b) * u + cd * quad
    dv = -2.0 * (a + b) * v + cs * quad
    return np.array([dp00, dp01, dp10, dp11]), du, dv


def anti_x_norm(rho) -> float:
    """Largest magnitude among the eight anti-X matrix entries."""
    m = rho.matrix if isinstance(rho, TwoQubitState) else np.asarray(rho)
    return float(np.abs(m[_ANTI_X_MASK]).max())


def evolve(
    initial: TwoQubitState,
    cm: StandardFormCM,
    gamma: float = 1.0,
    tau_max: float = 50.0,
    n_steps: int = 200,
    rtol: float = 1e-9,
    atol: float = 1e-12,
) -> Trajectory:
    """Integrate the master equation from `initial` on an even tau grid."""
    if gamma <= 0.0:
        raise DomainError(f"gamma={gamma} must be positive")
    if tau_max <= 0.0:
        raise DomainError(f"tau_max={tau_max} must be positive")
    if n_steps < 2:
        raise DomainError(f"n_steps={n_steps} must be at least 2")
    lv = liouvillian(cm)
    taus = np.linspace(0.0, tau_max, n_steps)
    sol = solve_ivp(
        lambda _t, y: lv @ y,
        (0.0, tau_max),
        initial.matrix.flatten(),
        t_eval=taus,
        rtol=rtol,
        atol=atol,
    )
    if not sol.success:
        raise IntegrationError(f"master-equation integration failed: {sol.message}")
    states = []
    for i in range(sol.y.shape[1]):
        m = sol.y[:, i].reshape(4, 4)
        m = 0.5 * (m + m.conj().T)
        m /= np.trace(m).real
        states.append(TwoQubitState(m))
    return Trajectory(times=taus / gamma, states=states, resource=cm, gamma=gamma)


def relax_to_steady_state(
    initial: TwoQubitState,
    cm: StandardFormCM,
    rhs_norm_tol: float = 1e-10,
    tau_chunk: float = 10.0,
    max_tau: float = 2000.0,
    rtol: float = 1e-12,
    atol: float = 1e-14,
) -> TwoQubitState:
    """Integrate adaptively until the generator's image has small norm.

    Tolerances are tighter than in `evolve` because the reachable RHS norm
    is floored by the integrator's global error times the generator norm.
    """
    lv = liouvillian(cm)
    y = initial.matrix.flatten().astype(complex)
    tau = 0.0
    while tau < max_tau:
        if float(np.abs(lv @ y).max()) < rhs_norm_tol:
            break
        sol = solve_ivp(
            lambda _t, v: lv @ v,
            (0.0, tau_chunk),
            y,
            method="DOP853",
            rtol=rtol,
            atol=atol,
        )
        if not sol.success:
            raise IntegrationError(f"relaxation failed: {sol.message}")
        y = sol.y[:, -1]
        tau += tau_chunk
    else:
        raise IntegrationError(f"no steady state within tau={max_tau}")
    m = y.reshape(4, 4)
    m = 0.5 * (m + m.conj().T)
    m /= np.trace(m).real
    return TwoQubitState(m)


def trajectory_rows(traj: Trajectory) -> tuple[list[str], list[list[float]]]:
    """Tabulate a trajectory for CSV export.

    Columns: time, X-block values (real and imaginary coherences), the
    anti-X leak norm, negativity and global linear entropy.
    """
    header = [
        "tau",
        "p00",
        "p01",
        "p10",
        "p11",
        "coh_outer_re",
        "coh_outer_im",
        "coh_inner_re",
        "coh_inner_im",
        "anti_x_norm",
        "negativity",
        "global_entropy",
    ]
    rows = []
    for t, st in zip(traj.times, traj.states):
        m = st.matrix
        rows.append(
            [
                float(t),
                m[0, 0].real,
                m[1, 1].real,
                m[2, 2].real,
                m[3, 3].real,
                m[0, 3].real,
                m[0, 3].imag,
                m[1, 2].real,
                m[1, 2].imag,
                anti_x_norm(st),
                negativity(st),
                linear_entropy(st),
            ]
        )
    return header, rows
