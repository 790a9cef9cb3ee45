"""Render figures from cvqmap CSV outputs.

This package never computes physics: every number it draws comes from a
CSV written by the cvqmap harness or boundary exporter, so a renderer bug
cannot change data.
"""

__version__ = "0.1.0"

from .csvio import MissingColumnError, Table, read_table
from .render import FIGURE_IDS, FigureSpec, render

__all__ = [
    "FIGURE_IDS",
    "FigureSpec",
    "MissingColumnError",
    "Table",
    "read_table",
    "render",
]
