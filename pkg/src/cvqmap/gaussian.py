"""Two-mode Gaussian covariance matrices in standard form.

A two-mode covariance matrix in standard form is fixed by four reals
(a, b, c_plus, c_minus); this module validates physicality, computes
symplectic spectra, negativity and linear entropies, and converts to and
from the entropic coordinates (s, d, g, lambda) that index the physical
entangled region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import InvalidInputError, NoSolutionError, OutOfRegionError

__all__ = [
    "OMEGA",
    "StandardFormCM",
    "EntropicParams",
    "PhysicalityReport",
    "validate_cm",
    "ptranspose_min_symplectic",
    "gaussian_negativity",
    "gaussian_entropies",
    "from_entropic_params",
    "to_entropic_params",
    "region_check",
]

# Symplectic form for two modes, ordering (q1, p1, q2, p2).
OMEGA = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
    ]
)

# Radicands this close to zero (boundary families, pure states) are clamped.
_RADICAND_CLAMP = 1e-12


@dataclass(frozen=True)
class StandardFormCM:
    """Standard-form two-mode covariance matrix (a, b, c+, c-)."""

    a: float
    b: float
    c_plus: float
    c_minus: float

    def __post_init__(self):
        vals = (self.a, self.b, self.c_plus, self.c_minus)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidInputError(f"non-finite CM entries: {vals}")

    def matrix(self) -> np.ndarray:
        """Expand to the full 4x4 real symmetric matrix."""
        a, b, cp, cm = self.a, self.b, self.c_plus, self.c_minus
        return np.array(
            [
                [a, 0.0, cp, 0.0],
                [0.0, a, 0.0, cm],
                [cp, 0.0, b, 0.0],
                [0.0, cm, 0.0, b],
            ]
        )

    def det(self) -> float:
        """det V12 from the standard-form factorization."""
        ab = self.a * self.b
        return (ab - self.c_plus**2) * (ab - self.c_minus**2)


@dataclass(frozen=True)
class EntropicParams:
    """Entropic coordinates (s, d, g, lambda) of a two-mode resource.

    s and d fix the marginals (a = s + d, b = s - d), g is the square root
    of det V12 (so global linear entropy is 1 - 1/g), and lam orders
    entanglement at fixed entropies, from least (-1) to most (+1) entangled.
    """

    s: float
    d: float
    g: float
    lam: float

    def __post_init__(self):
        vals = (self.s, self.d, self.g, self.lam)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidInputError(f"non-finite entropic params: {vals}")


@dataclass(frozen=True)
class PhysicalityReport:
    positive_definite: bool
    uncertainty_ok: bool
    min_eigenvalue_of_V_plus_iOmega: float

    @property
    def physical(self) -> bool:
        return self.positive_definite and self.uncertainty_ok


def validate_cm(cm: StandardFormCM, tol: float = 1e-10) -> PhysicalityReport:
    """Check positivity and the uncertainty inequality V12 + i*Omega >= 0."""
    v = cm.matrix()
    min_v = float(np.linalg.eigvalsh(v).min())
    min_unc = float(np.linalg.eigvalsh(v + 1j * OMEGA).min())
    return PhysicalityReport(
        positive_definite=min_v > tol,
        uncertainty_ok=min_unc >= -tol,
        min_eigenvalue_of_V_plus_iOmega=min_unc,
    )


def ptranspose_min_symplectic(cm: StandardFormCM) -> float:
    """Smallest symplectic eigenvalue of the partially transposed CM."""
    a, b = cm.a, cm.b
    delta_t = a * a + b * b - 2.0 * cm.c_plus * cm.c_minus
    disc = delta_t * delta_t - 4.0 * cm.det()
    if disc < 0.0:
        if disc < -_RADICAND_CLAMP * max(1.0, delta_t * delta_t):
            raise InvalidInputError(
                f"discriminant {disc} negative beyond tolerance; CM is not physical"
            )
        disc = 0.0
    inner = 0.5 * (delta_t - math.sqrt(disc))
    return math.sqrt(max(inner, 0.0))


def gaussian_negativity(cm: StandardFormCM) -> float:
    """Negativity of the two-mode state: max{0, (1 - nu)/nu}."""
    nu = ptranspose_min_symplectic(cm)
    return max(0.0, (1.0 - nu) / nu)


def gaussian_entropies(cm: StandardFormCM) -> dict:
    """Global and marginal linear entropies of the resource."""
    return {
        "global": 1.0 - 1.0 / math.sqrt(cm.det()),
        "marginal_1": 1.0 - 1.0 / cm.a,
        "marginal_2": 1.0 - 1.0 / cm.b,
    }


def region_check(p: EntropicParams) -> bool:
    """True iff (s, d, g, lambda) lies in the physical-and-entangled box."""
    return (
        p.s >= 1.0
        and abs(p.d) <= p.s - 1.0
        and 2.0 * abs(p.d) + 1.0 <= p.g <= 2.0 * p.s - 1.0
        and -1.0 <= p.lam <= 1.0
    )


def _c_pair(s: float, d: float, g: float, lam: float) -> tuple[float, float]:
    h_d = (2.0 * d * d + g) * (lam + 1.0)
    f_d = 4.0 * d * d + (g * g + 1.0) * (lam - 1.0) / 2.0
    f_s = 4.0 * s * s + (g * g + 1.0) * (lam - 1.0) / 2.0
    r1 = (f_d - h_d) ** 2 - 4.0 * g * g
    r2 = (f_s - h_d) ** 2 - 4.0 * g * g
    scale = max(1.0, g * g)
    for r in (r1, r2):
        if r < -_RADICAND_CLAMP * scale:
            raise OutOfRegionError(
                f"negative radicand {r} in c± at (s={s}, d={d}, g={g}, lam={lam})"
            )
    r1 = max(r1, 0.0)
    r2 = max(r2, 0.0)
    q = 4.0 * math.sqrt(s * s - d * d)
    return (math.sqrt(r1) + math.sqrt(r2)) / q, (math.sqrt(r1) - math.sqrt(r2)) / q


def from_entropic_params(p: EntropicParams) -> StandardFormCM:
    """Build the standard-form CM with the given entropic coordinates."""
    if not region_check(p):
        raise OutOfRegionError(f"{p} outside the physical-entangled region")
    cp, cm_ = _c_pair(p.s, p.d, p.g, p.lam)
    return StandardFormCM(a=p.s + p.d, b=p.s - p.d, c_plus=cp, c_minus=cm_)


def to_entropic_params(cm: StandardFormCM) -> EntropicParams:
    """Invert the entropic coordinate map.

    Signs of the correlations are canonicalized first (local rotations leave
    all diagnostics invariant), then lambda is recovered by bisection on the
    monotone map lambda -> c+ - c-.  Pure states (g = 1) are
    lambda-degenerate and report lambda = 1 by convention.
    """
    s = (cm.a + cm.b) / 2.0
    d = (cm.a - cm.b) / 2.0
    det = cm.det()
    if det <= 0.0:
        raise NoSolutionError("CM has non-positive determinant")
    g = math.sqrt(det)
    p_probe = EntropicParams(s=s, d=d, g=g, lam=1.0)
    if not region_check(p_probe):
        raise NoSolutionError(f"CM {cm} outside the image of the parameterization")
    # Canonical orbit representative under local rotations (joint sign flip
    # and swap of the correlation pair): c+ = max magnitude, relative sign
    # preserved.  A lone sign flip is the partial transpose, not local.
    x, y = cm.c_plus, cm.c_minus
    hi, lo = max(abs(x), abs(y)), min(abs(x), abs(y))
    target = hi - math.copysign(lo, x * y) if x * y != 0 else hi
    if g <= 1.0 + 1e-12:
        return EntropicParams(s=s, d=d, g=g, lam=1.0)

    def gap(lam: float) -> float:
        cp, cm_ = _c_pair(s, d, g, lam)
        return (cp - cm_) - target

    lo, hi = gap(-1.0), gap(1.0)
    tol = 1e-12 * max(1.0, target)
    if lo > tol or hi < -tol:
        raise NoSolutionError(f"CM {cm} outside the image of the parameterization")
    if abs(lo) <= tol:
        lam = -1.0
    elif abs(hi) <= tol:
        lam = 1.0
    else:
        lam = brentq(gap, -1.0, 1.0, xtol=1e-14)
    return EntropicParams(s=s, d=d, g=g, lam=float(lam))
