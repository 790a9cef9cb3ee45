"""Command-line entry point.

Subcommands: map (single-state diagnostics as JSON), evolve (trajectory
CSV), sample (experiment batch), boundary (curve CSV), verify (oracle
suite).  Exit codes: 0 success, 2 domain/usage errors, 1 internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .errors import CvqmapError, DomainError, InvalidInputError
from .extremal import CURVE_KINDS, boundary_curve
from .gaussian import (
    EntropicParams,
    StandardFormCM,
    from_entropic_params,
    gaussian_entropies,
    gaussian_negativity,
    validate_cm,
)
from .harness import (
    EXPERIMENT_KINDS,
    ExperimentConfig,
    format_float,
    run_experiment,
    verify_suite,
    write_csv,
)
from .interface import (
    evolve,
    mapped_global_entropy,
    mapped_marginal_entropy,
    mapped_negativity,
    steady_state,
    trajectory_rows,
)
from .qubit import TwoQubitState


def _json_17g(obj) -> str:
    """Serialize with floats at 17 significant digits and fixed key order."""
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {_json_17g(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_17g(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return format_float(obj)
    return json.dumps(obj)


def _add_cm_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--cplus", type=float)
    p.add_argument("--cminus", type=float)
    p.add_argument("--s", type=float)
    p.add_argument("--d", type=float)
    p.add_argument("--g", type=float)
    p.add_argument("--lambda", dest="lam", type=float)


def _cm_from_args(args) -> StandardFormCM:
    direct = [args.a, args.b, args.cplus, args.cminus]
    entropic = [args.s, args.d, args.g, args.lam]
    if all(v is not None for v in direct) and all(v is None for v in entropic):
        cm = StandardFormCM(a=args.a, b=args.b, c_plus=args.cplus, c_minus=args.cminus)
        report = validate_cm(cm)
        if not report.physical:
            raise DomainError(
                "CM is not physical: "
                + ("V12 not positive definite; " if not report.positive_definite else "")
                + (
                    f"uncertainty inequality violated (min eig V+iOmega = "
                    f"{report.min_eigenvalue_of_V_plus_iOmega:.3e})"
                    if not report.uncertainty_ok
                    else ""
                )
            )
        return cm
    if all(v is not None for v in entropic) and all(v is None for v in direct):
        return from_entropic_params(EntropicParams(s=args.s, d=args.d, g=args.g, lam=args.lam))
    raise DomainError(
        "specify exactly one input mode: --a/--b/--cplus/--cminus or --s/--d/--g/--lambda"
    )


def _matrix_payload(m: np.ndarray) -> list:
    return [[v.real, v.imag] for v in m.flatten()]


def _cmd_map(args) -> int:
    cm = _cm_from_args(args)
    ss = steady_state(cm)
    fe = gaussian_entropies(cm)
    doc = {
        "resource": {"a": cm.a, "b": cm.b, "c_plus": cm.c_plus, "c_minus": cm.c_minus},
        "steady_state_matrix": _matrix_payload(ss.matrix()),
        "field_entropy_global": fe["global"],
        "field_entropy_marginal_1": fe["marginal_1"],
        "field_entropy_marginal_2": fe["marginal_2"],
        "field_negativity": gaussian_negativity(cm),
        "qubit_entropy_global": mapped_global_entropy(cm),
        "qubit_entropy_marginal_a": mapped_marginal_entropy(fe["marginal_1"]),
        "qubit_entropy_marginal_b": mapped_marginal_entropy(fe["marginal_2"]),
        "qubit_negativity": mapped_negativity(cm),
    }
    print(_json_17g(doc))
    return 0


def _cmd_evolve(args) -> int:
    cm = _cm_from_args(args)
    initial = TwoQubitState(np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex))
    traj = evolve(initial, cm, gamma=args.gamma, tau_max=args.tau_max, n_steps=args.steps)
    header, rows = trajectory_rows(traj)
    write_csv(args.out, header, rows)
    print(f"wrote {len(rows)} trajectory points to {args.out}")
    return 0


def _cmd_sample(args) -> int:
    config = ExperimentConfig(
        kind=args.kind,
        n_samples=args.n,
        seed=args.seed,
        output_path=args.out,
        symmetric_only=args.symmetric,
        s_max=args.smax,
        workers=args.workers,
        werner_augment_fraction=args.werner_augment,
        tau_max=args.tau_max,
    )
    _, rows = run_experiment(config)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def _cmd_boundary(args) -> int:
    curve = boundary_curve(args.curve, n_points=args.n, n_grid=args.grid)
    header = list(curve.axis_names)
    meta = f"# kind={curve.kind} n_points={args.n} n_grid={args.grid}"
    lines = [meta, ",".join(header)]
    for s in curve.samples:
        lines.append(",".join(format_float(v) for v in s))
    with open(args.out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(curve.samples)} samples to {args.out}")
    return 0


def _cmd_verify(args) -> int:
    results = verify_suite(seed=args.seed, quick=args.quick)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = f" ({r.detail})" if r.detail else ""
        print(f"{status} {r.name}: worst residual {r.worst_residual:.3e}{detail}")
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvqmap",
        description="Map two-mode Gaussian resources to two-qubit steady states.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_map = sub.add_parser("map", help="steady state and diagnostics as JSON")
    _add_cm_flags(p_map)

    p_ev = sub.add_parser("evolve", help="integrate the master equation, write CSV")
    _add_cm_flags(p_ev)
    p_ev.add_argument("--out", required=True)
    p_ev.add_argument("--gamma", type=float, default=1.0)
    p_ev.add_argument("--tau-max", type=float, default=50.0)
    p_ev.add_argument("--steps", type=int, default=200)

    p_sa = sub.add_parser("sample", help="run a sampling experiment, write CSV")
    p_sa.add_argument("--kind", choices=EXPERIMENT_KINDS, required=True)
    p_sa.add_argument("--n", type=int, default=1000)
    p_sa.add_argument("--seed", type=int, default=0)
    p_sa.add_argument("--out", required=True)
    p_sa.add_argument("--symmetric", action="store_true")
    p_sa.add_argument("--smax", type=float, default=10.0)
    p_sa.add_argument("--workers", type=int, default=1)
    p_sa.add_argument("--werner-augment", type=float, default=0.0)
    p_sa.add_argument("--tau-max", type=float, default=8.0)

    p_bd = sub.add_parser("boundary", help="emit a boundary curve as CSV")
    p_bd.add_argument("--curve", choices=CURVE_KINDS, required=True)
    p_bd.add_argument("--out", required=True)
    p_bd.add_argument("--n", type=int, default=200)
    p_bd.add_argument("--grid", type=int, default=50)

    p_vf = sub.add_parser("verify", help="run the oracle cross-check suite")
    p_vf.add_argument("--seed", type=int, default=20260826)
    p_vf.add_argument("--quick", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "map": _cmd_map,
        "evolve": _cmd_evolve,
        "sample": _cmd_sample,
        "boundary": _cmd_boundary,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (DomainError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CvqmapError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
