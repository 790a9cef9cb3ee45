"""Figure assembly: one renderer per experiment kind.

Each renderer takes a FigureSpec whose input CSVs come from the cvqmap
`sample`/`evolve` commands and whose overlay CSVs come from the cvqmap
`boundary` command.  Output is written as both PNG and SVG next to the
requested path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .csvio import Table, read_table

FIGURE_IDS = (
    "fig1a_entropy_scatter",
    "fig1b_negativity_scatter",
    "fig2a_mems_plane",
    "fig2bc_entropy_surfaces",
    "figS4_marginal_pyramid",
    "trajS1_S3",
)

_ENTANGLED_COLOR = "#1d3557"
_SEPARABLE_COLOR = "#a8bdd4"


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    input_csvs: tuple[str, ...]
    output_path: str
    overlay_curves: tuple[str, ...] = ()
    marker_size: float = 4.0
    dpi: int = 150

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise ValueError(
                f"unknown figure id {self.figure_id!r}; expected one of {FIGURE_IDS}"
            )
        if not self.input_csvs:
            raise ValueError("at least one input CSV is required")


def _entanglement_colors(table: Table) -> np.ndarray:
    neg = table.col("qubit_negativity")
    return np.where(neg > 0.0, _ENTANGLED_COLOR, _SEPARABLE_COLOR)


def _overlays(spec: FigureSpec) -> list[Table]:
    return [read_table(p) for p in spec.overlay_curves]


def _save(fig, output_path: str, dpi: int) -> list[Path]:
    base = Path(output_path)
    if base.suffix:
        base = base.with_suffix("")
    written = []
    for ext in (".png", ".svg"):
        out = base.with_suffix(ext)
        fig.savefig(out, dpi=dpi, bbox_inches="tight")
        written.append(out)
    plt.close(fig)
    return written


def _render_fig1a(spec: FigureSpec):
    table = read_table(spec.input_csvs[0])
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    ax.scatter(
        table.col("field_entropy_global"),
        table.col("qubit_entropy_global"),
        s=spec.marker_size,
        c=_entanglement_colors(table),
        linewidths=0,
        rasterized=True,
    )
    for curve in _overlays(spec):
        ax.plot(curve.data[:, 0], curve.data[:, 1], "k-", lw=1.2)
    ax.plot([0, 1], [0, 1], "k--", lw=1.0, label="purification threshold")
    ax.set_xlabel("field global linear entropy")
    ax.set_ylabel("qubit global linear entropy")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.legend(loc="upper left", frameon=False, fontsize=8)
    ax.set_title("entropy transfer (dark: entangled, light: separable)", fontsize=9)
    return fig


def _render_fig1b(spec: FigureSpec):
    table = read_table(spec.input_csvs[0])
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    ax.scatter(
        table.col("field_negativity_normalized"),
        table.col("qubit_negativity"),
        s=spec.marker_size,
        c=_entanglement_colors(table),
        linewidths=0,
        rasterized=True,
    )
    for curve in _overlays(spec):
        # the boundary exporter tabulates against raw field negativity;
        # re-express the abscissa as N/(1+N) to match the scatter axis
        n12 = curve.col("field_negativity")
        ax.plot(n12 / (1.0 + n12), curve.col("qubit_negativity_max"), "k-", lw=1.2)
    ax.set_xlabel("normalized field negativity  N/(1+N)")
    ax.set_ylabel("qubit negativity")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.set_title("entanglement transfer with pure-resource bound", fontsize=9)
    return fig


def _render_fig2a(spec: FigureSpec):
    table = read_table(spec.input_csvs[0])
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    ax.scatter(
        table.col("qubit_entropy_global"),
        table.col("qubit_negativity"),
        s=spec.marker_size,
        c=_entanglement_colors(table),
        linewidths=0,
        rasterized=True,
    )
    for curve in _overlays(spec):
        ax.plot(
            curve.col("qubit_entropy"),
            curve.col("qubit_negativity_max"),
            "k-",
            lw=1.4,
            label="maximally entangled mixed states",
        )
    ax.set_xlabel("qubit global linear entropy")
    ax.set_ylabel("qubit negativity")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.legend(loc="upper right", frameon=False, fontsize=8)
    ax.set_title("entropy vs entanglement plane of reachable steady states", fontsize=9)
    return fig


def _render_fig2bc(spec: FigureSpec):
    table = read_table(spec.input_csvs[0])
    fig = plt.figure(figsize=(6.4, 4.8))
    ax = fig.add_subplot(projection="3d")
    ax.scatter(
        table.col("qubit_entropy_marginal_a"),
        table.col("qubit_entropy_global"),
        table.col("qubit_negativity"),
        s=spec.marker_size,
        c=_entanglement_colors(table),
        linewidths=0,
        depthshade=False,
    )
    sheet_colors = {"qmems_surface": "#e07a5f", "qlems_surface": "#3d5a80"}
    for curve in _overlays(spec):
        kind = next((k for k in sheet_colors if k in Path(curve.path).name), None)
        color = sheet_colors.get(kind, "#777777")
        ax.plot_trisurf(
            curve.col("marginal_entropy"),
            curve.col("global_entropy"),
            curve.col("qubit_negativity"),
            color=color,
            alpha=0.35,
            linewidth=0,
        )
    ax.set_xlabel("marginal entropy")
    ax.set_ylabel("global entropy")
    ax.set_zlabel("qubit negativity")
    ax.set_title("extremal sheets over the symmetric entropic plane", fontsize=9)
    return fig


def _render_figS4(spec: FigureSpec):
    table = read_table(spec.input_csvs[0])
    fig = plt.figure(figsize=(6.4, 4.8))
    ax = fig.add_subplot(projection="3d")
    ax.scatter(
        table.col("qubit_entropy_marginal_a"),
        table.col("qubit_entropy_marginal_b"),
        table.col("qubit_negativity"),
        s=spec.marker_size,
        c=_entanglement_colors(table),
        linewidths=0,
        depthshade=False,
    )
    for curve in _overlays(spec):
        ax.plot_trisurf(
            curve.col("marginal_entropy_a"),
            curve.col("marginal_entropy_b"),
            curve.col("qubit_negativity"),
            color="#e07a5f",
            alpha=0.35,
            linewidth=0,
        )
    ax.set_xlabel("marginal entropy (qubit a)")
    ax.set_ylabel("marginal entropy (qubit b)")
    ax.set_zlabel("qubit negativity")
    ax.set_title("attainable negativity over the marginal-entropy pyramid", fontsize=9)
    return fig


def _render_trajectories(spec: FigureSpec):
    table = read_table(spec.input_csvs[0])
    lam = table.col("lambda")
    tau = table.col("tau")
    lams = np.unique(lam)
    fig, (ax_m, ax_n) = plt.subplots(1, 2, figsize=(9.6, 4.0))

    # left panel: matrix elements along the most entangling sweep member
    sel = lam == lams.max()
    order = np.argsort(tau[sel])
    for name, label in (
        ("p00", r"$\rho_{00,00}$"),
        ("p01", r"$\rho_{01,01}$"),
        ("p10", r"$\rho_{10,10}$"),
        ("p11", r"$\rho_{11,11}$"),
        ("coh_outer_re", r"$\mathrm{Re}\,\rho_{00,11}$"),
        ("coh_inner_re", r"$\mathrm{Re}\,\rho_{01,10}$"),
    ):
        ax_m.plot(tau[sel][order], table.col(name)[sel][order], lw=1.2, label=label)
    ax_m.set_xlabel(r"rescaled time $\tau$")
    ax_m.set_ylabel("matrix element")
    ax_m.legend(fontsize=7, frameon=False, ncols=2)

    # right panel: negativity family with steady-state asymptotes
    cmap = plt.get_cmap("viridis")
    for i, value in enumerate(lams):
        sel = lam == value
        order = np.argsort(tau[sel])
        color = cmap(i / max(1, len(lams) - 1))
        ax_n.plot(
            tau[sel][order],
            table.col("negativity")[sel][order],
            color=color,
            lw=1.2,
            label=f"mixing {value:+.1f}",
        )
        ax_n.axhline(
            table.col("steady_state_negativity")[sel][0],
            color=color,
            ls="--",
            lw=0.8,
        )
    ax_n.set_xlabel(r"rescaled time $\tau$")
    ax_n.set_ylabel("qubit negativity")
    ax_n.legend(fontsize=7, frameon=False)
    fig.suptitle("relaxation toward the steady state (dashed: asymptotes)", fontsize=9)
    return fig


_RENDERERS = {
    "fig1a_entropy_scatter": _render_fig1a,
    "fig1b_negativity_scatter": _render_fig1b,
    "fig2a_mems_plane": _render_fig2a,
    "fig2bc_entropy_surfaces": _render_fig2bc,
    "figS4_marginal_pyramid": _render_figS4,
    "trajS1_S3": _render_trajectories,
}


def render(spec: FigureSpec) -> list[Path]:
    """Render one figure; returns the written PNG and SVG paths."""
    fig = _RENDERERS[spec.figure_id](spec)
    return _save(fig, spec.output_path, spec.dpi)
