"""Standalone figure script: cvqfigs <figure_id> --input ... --output ..."""

from __future__ import annotations

import argparse
import sys

from .csvio import MissingColumnError
from .render import FIGURE_IDS, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvqfigs",
        description="Render a figure from cvqmap CSV outputs (PNG and SVG).",
    )
    parser.add_argument("figure_id", choices=FIGURE_IDS)
    parser.add_argument(
        "--input", action="append", required=True, help="data CSV (repeatable)"
    )
    parser.add_argument(
        "--overlay", action="append", default=[], help="boundary-curve CSV (repeatable)"
    )
    parser.add_argument("--output", required=True, help="output path (extension ignored)")
    parser.add_argument("--marker-size", type=float, default=4.0)
    parser.add_argument("--dpi", type=int, default=150)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        figure_id=args.figure_id,
        input_csvs=tuple(args.input),
        overlay_curves=tuple(args.overlay),
        output_path=args.output,
        marker_size=args.marker_size,
        dpi=args.dpi,
    )
    try:
        written = render(spec)
    except (MissingColumnError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for path in written:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
