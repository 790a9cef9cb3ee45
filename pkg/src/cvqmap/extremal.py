"""Extremal resource families and analytic boundary curves.

GMEMS/GLEMS are the most/least entangled two-mode Gaussian states at fixed
global and marginal entropies (lambda = +1/-1); GMEMMS maximize
entanglement at fixed marginals (g = 2|d| + 1).  Their two-qubit images
under the map (QMEMS/QLEMS) bound every attainable steady state in the
entropic diagrams, and this module also provides the curves bounding the
qubit diagnostics as functions of the resource diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NoSolutionError
from .gaussian import EntropicParams, StandardFormCM, from_entropic_params
from .interface import mapped_global_entropy, mapped_negativity

__all__ = [
    "BoundaryCurve",
    "CURVE_KINDS",
    "gmems",
    "glems",
    "squeezed_thermal",
    "gmemms",
    "qubit_entropy_max",
    "qubit_entropy_min",
    "nmax_vs_field_negativity",
    "mems_boundary",
    "qmems_g",
    "qmems_negativity",
    "qlems_negativity",
    "gmemms_image_boundary",
    "boundary_curve",
]

CURVE_KINDS = (
    "qubit_entropy_max",
    "qubit_entropy_min",
    "nmax_vs_field_negativity",
    "mems_werner",
    "qmems_surface",
    "qlems_surface",
    "gmemms_ridge",
)


@dataclass(frozen=True)
class BoundaryCurve:
    """Sampled boundary curve or surface for export and overlay."""

    kind: str
    axis_names: tuple[str, ...]
    samples: list[tuple] = field(default_factory=list)


def gmems(s: float, d: float, g: float) -> StandardFormCM:
    """Most entangled resource at fixed entropies (lambda = +1)."""
    return from_entropic_params(EntropicParams(s=s, d=d, g=g, lam=1.0))


def glems(s: float, d: float, g: float) -> StandardFormCM:
    """Least entangled resource at fixed entropies (lambda = -1)."""
    return from_entropic_params(EntropicParams(s=s, d=d, g=g, lam=-1.0))


def squeezed_thermal(g: float, r: float) -> StandardFormCM:
    """Two-mode squeezed thermal state with purity parameter g, squeezing r."""
    if g < 1.0:
        raise DomainError(f"g={g} must be >= 1")
    if r < 0.0:
        raise DomainError(f"squeezing r={r} must be >= 0")
    sg = math.sqrt(g)
    c = sg * math.sinh(2.0 * r)
    return StandardFormCM(a=sg * math.cosh(2.0 * r), b=sg * math.cosh(2.0 * r), c_plus=c, c_minus=-c)


def gmemms(a: float, b: float) -> StandardFormCM:
    """Maximally entangled resource at fixed marginals: g = 2|d| + 1."""
    if min(a, b) < 1.0:
        raise DomainError(f"marginals a={a}, b={b} must both be >= 1")
    c = math.sqrt((1.0 + max(a, b)) * (min(a, b) - 1.0))
    return StandardFormCM(a=a, b=b, c_plus=c, c_minus=-c)


def _g_of_field_entropy(field_entropy: float) -> float:
    if not 0.0 <= field_entropy < 1.0:
        raise DomainError(f"field entropy {field_entropy} outside [0, 1)")
    return 1.0 / (1.0 - field_entropy)


def qubit_entropy_max(field_entropy: float) -> float:
    """Upper envelope of qubit global entropy, attained in the Werner limit."""
    g = _g_of_field_entropy(field_entropy)
    return 1.0 - 4.0 / (1.0 + g * g) ** 2


def qubit_entropy_min(field_entropy: float) -> float:
    """Lower envelope of qubit global entropy, attained by product states."""
    _g_of_field_entropy(field_entropy)
    return (2.0 / 3.0) * field_entropy * (2.0 - field_entropy)


def nmax_vs_field_negativity(n12: float) -> float:
    """Maximum qubit negativity at fixed field negativity, attained by pure states."""
    if n12 < 0.0:
        raise DomainError(f"field negativity {n12} must be >= 0")
    return 1.0 - 2.0 / ((1.0 + n12) ** 2 + 1.0)


def mems_boundary(s_qubit: float) -> float:
    """Maximum qubit negativity at fixed qubit global entropy (Werner branch)."""
    if not 0.0 <= s_qubit <= 1.0:
        raise DomainError(f"qubit entropy {s_qubit} outside [0, 1]")
    if s_qubit >= 8.0 / 9.0:
        return 0.0
    return (-1.0 + 3.0 * math.sqrt(1.0 - s_qubit)) / 2.0


def qmems_g(s_loc: float, s_global: float) -> float:
    """Resource g for the symmetric QMEMS with given qubit entropies."""
    radicand = 4.0 - 9.0 * s_global + s_loc * (4.0 + s_loc)
    if radicand < 0.0:
        raise NoSolutionError(
            f"no physical QMEMS at (S_loc={s_loc}, S={s_global}): negative radicand"
        )
    g = 3.0 / (1.0 - s_loc + math.sqrt(radicand))
    s = 1.0 / math.sqrt(1.0 - s_loc)
    if not 1.0 - 1e-12 <= g <= 2.0 * s - 1.0 + 1e-12:
        raise NoSolutionError(
            f"QMEMS g={g} outside the entropic region for s={s}"
        )
    return g


def qmems_negativity(s_loc: float, s_global: float) -> float:
    """Closed-form negativity of the symmetric QMEMS (upper sheet)."""
    if 9.0 * s_global + 4.0 * (s_loc - 2.0) * s_loc >= 4.0 * s_loc * math.sqrt(
        1.0 - s_loc + s_loc * s_loc
    ):
        return 0.0
    two_plus = 2.0 + s_loc
    root = math.sqrt(two_plus * two_plus - 9.0 * s_global)
    inner = 2.0 + 8.0 * s_loc - s_loc * s_loc - 9.0 * s_global + (s_loc - 1.0) * root
    return (-two_plus + root + 2.0 * math.sqrt(inner)) / 6.0


def qlems_negativity(s_loc: float, s_global: float) -> float:
    """Negativity of the symmetric QLEMS (lower sheet), by root-finding in g.

    No closed form exists; g is located by bisection against the mapped
    global entropy, which is monotone increasing in g on the physical
    interval (checked at the bracket endpoints).
    """
    if not 0.0 <= s_loc < 1.0:
        raise DomainError(f"S_loc={s_loc} outside [0, 1)")
    s = 1.0 / math.sqrt(1.0 - s_loc)
    lo, hi = 1.0, 2.0 * s - 1.0

    def entropy_gap(g: float) -> float:
        return mapped_global_entropy(glems(s, 0.0, g)) - s_global

    f_lo, f_hi = entropy_gap(lo), entropy_gap(hi)
    if f_lo > f_hi + 1e-12:
        raise NoSolutionError("mapped entropy is not increasing in g on the bracket")
    if f_lo > 1e-12 or f_hi < -1e-12:
        raise NoSolutionError(
            f"no QLEMS with (S_loc={s_loc}, S={s_global}): entropy not in range"
        )
    if abs(f_lo) <= 1e-12:
        g = lo
    elif abs(f_hi) <= 1e-12:
        g = hi
    else:
        g = brentq(entropy_gap, lo, hi, xtol=1e-12)
    return mapped_negativity(glems(s, 0.0, g))


def gmemms_image_boundary(s_a: float, s_b: float) -> float:
    """Maximum qubit negativity attainable at fixed qubit marginal entropies."""
    for v in (s_a, s_b):
        if not 0.0 <= v < 1.0:
            raise DomainError(f"marginal qubit entropy {v} outside [0, 1)")
    # Invert the marginal transfer law S_qubit = S_field(2 - S_field).
    a = 1.0 / math.sqrt(1.0 - s_a)
    b = 1.0 / math.sqrt(1.0 - s_b)
    return mapped_negativity(gmemms(a, b))


def _grid(lo: float, hi: float, n: int) -> np.ndarray:
    return np.linspace(lo, hi, n)


def boundary_curve(kind: str, n_points: int = 200, n_grid: int = 50) -> BoundaryCurve:
    """Sample a named boundary curve or surface."""
    if kind not in CURVE_KINDS:
        raise DomainError(f"unknown curve kind {kind!r}; expected one of {CURVE_KINDS}")
    samples: list[tuple] = []
    if kind in ("qubit_entropy_max", "qubit_entropy_min"):
        fn = qubit_entropy_max if kind == "qubit_entropy_max" else qubit_entropy_min
        for x in _grid(0.0, 0.999, n_points):
            samples.append((float(x), fn(float(x))))
        return BoundaryCurve(kind, ("field_entropy", "qubit_entropy"), samples)
    if kind == "nmax_vs_field_negativity":
        for x in _grid(0.0, 20.0, n_points):
            samples.append((float(x), nmax_vs_field_negativity(float(x))))
        return BoundaryCurve(kind, ("field_negativity", "qubit_negativity_max"), samples)
    if kind == "mems_werner":
        for x in _grid(0.0, 1.0, n_points):
            samples.append((float(x), mems_boundary(float(x))))
        return BoundaryCurve(kind, ("qubit_entropy", "qubit_negativity_max"), samples)
    if kind in ("qmems_surface", "qlems_surface"):
        for s_loc in _grid(0.0, 0.95, n_grid):
            for s_glob in _grid(0.0, 0.95, n_grid):
                try:
                    if kind == "qmems_surface":
                        qmems_g(float(s_loc), float(s_glob))
                        val = qmems_negativity(float(s_loc), float(s_glob))
                    else:
                        val = qlems_negativity(float(s_loc), float(s_glob))
                except (NoSolutionError, DomainError):
                    continue
                samples.append((float(s_loc), float(s_glob), val))
        return BoundaryCurve(kind, ("marginal_entropy", "global_entropy", "qubit_negativity"), samples)
    # gmemms_ridge
    for s_a in _grid(0.0, 0.95, n_grid):
        for s_b in _grid(0.0, 0.95, n_grid):
            samples.append((float(s_a), float(s_b), gmemms_image_boundary(float(s_a), float(s_b))))
    return BoundaryCurve(kind, ("marginal_entropy_a", "marginal_entropy_b", "qubit_negativity"), samples)
