# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Self-contained SVG line plots of sweep tables.

Panels are stacked vertically, each with its own axes, legend and title.
All coordinates are printed with two decimals, so identical tables give
byte-identical files.
"""

import logging
from html import escape
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ..errors import EmptySelectionError
from ..propagate import TfseVariant
from .config import SweepConfig
from .presets import PlotGrouping

LOG = logging.getLogger(__name__)

COLORS = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
)

WIDTH = 760
PANEL_HEIGHT = 380
MARGIN_LEFT = 70
MARGIN_RIGHT = 200
MARGIN_TOP = 50
MARGIN_BOTTOM = 50
TICKS = 5

_AXIS_TITLES = {
    "p_total": "total probability",
    "p_excited": "excited probability",
}
_KEY_TITLES = {
    "variant": "",
    "l": "l",
    "beta": "beta",
    "lambda": "lambda",
    "n": "n",
    "c0": "C0",
}


def _number(value: float) -> str:
    return f"{value:.2f}"


class SvgBuilder:
    """Accumulate SVG elements."""

    def __init__(self, width: int, height: int) -> None:
        """Start a document.

        Parameters
        ----------
        width : int
            The width in pixels.
        height : int
            The height in pixels.
        """
        self._parts: List[str] = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f'<rect x="0" y="0" width="{width}" height="{height}" '
            'fill="#ffffff"/>',
        ]

    def line(
        self,
        x1: float,
        y1: float,
        x2: float,
        y2: float,
        stroke: str = "#000000",
        width: float = 1.0,
    ) -> None:
        """Add a straight line.

        Parameters
        ----------
        x1 : float
            The x coordinate of the start.
        y1 : float
            The y coordinate of the start.
        x2 : float
            The x coordinate of the end.
        y2 : float
            The y coordinate of the end.
        stroke : str, optional
            The colour, by default black.
        width : float, optional
            The stroke width, by default 1.
        """
        self._parts.append(
            f'<line x1="{_number(x1)}" y1="{_number(y1)}" '
            f'x2="{_number(x2)}" y2="{_number(y2)}" '
            f'stroke="{stroke}" stroke-width="{width:g}"/>'
        )

    def polyline(
        self, points: Sequence[Tuple[float, float]], stroke: str
    ) -> None:
        """Add an open polyline.

        Parameters
        ----------
        points : Sequence[Tuple[float, float]]
            The (x, y) vertices in drawing order.
        stroke : str
            The colour.
        """
        coordinates = " ".join(
            f"{_number(x)},{_number(y)}" for x, y in points
        )
        self._parts.append(
            f'<polyline fill="none" stroke="{stroke}" stroke-width="1.5" '
            f'points="{coordinates}"/>'
        )

    def text(
        self,
        x: float,
        y: float,
        content: str,
        anchor: str = "start",
        size: int = 12,
    ) -> None:
        """Add a text label (escaped).

        Parameters
        ----------
        x : float
            The x coordinate of the anchor.
        y : float
            The y coordinate of the baseline.
        content : str
            The label, XML special characters allowed.
        anchor : str, optional
            The SVG text-anchor, by default "start".
        size : int, optional
            The font size, by default 12.
        """
        self._parts.append(
            f'<text x="{_number(x)}" y="{_number(y)}" '
            f'text-anchor="{anchor}" font-size="{size}" '
            f'font-family="sans-serif">{escape(content)}</text>'
        )

    def get_svg(self) -> str:
        """Get the finished document.

        Returns
        -------
        str
            The SVG text, closed and newline terminated.
        """
        return "\n".join(self._parts + ["</svg>"]) + "\n"


def _format_value(key: str, value: Any) -> str:
    if key == "variant":
        return TfseVariant.parse(str(value)).info.display_name
    if isinstance(value, (float, np.floating)):
        return f"{_KEY_TITLES[key]}={float(value):g}"
    return f"{_KEY_TITLES[key]}={value}"


def _label(keys: Sequence[str], values: Any) -> str:
    if not isinstance(values, tuple):
        values = (values,)
    return ", ".join(
        _format_value(key, value) for key, value in zip(keys, values)
    )


def _groups(
    table: pd.DataFrame, keys: Sequence[str]
) -> List[Tuple[str, pd.DataFrame]]:
    if not keys:
        return [("", table)]
    return [
        (_label(keys, values), rows)
        for values, rows in table.groupby(list(keys), sort=False)
    ]


def _ticks(low: float, high: float) -> List[float]:
    return [low + (high - low) * index / (TICKS - 1) for index in range(TICKS)]


def _curves(
    rows: pd.DataFrame, grouping: PlotGrouping
) -> List[Tuple[str, np.ndarray, np.ndarray]]:
    curves = []
    for label, curve in _groups(rows, grouping.curve_by):
        curve = curve.sort_values("t", kind="stable")
        times = curve["t"].to_numpy(dtype=float)
        values = curve[grouping.observable].to_numpy(dtype=float)
        keep = np.isfinite(values)
        times, values = times[keep], values[keep]
        if len(times) < 2:
            raise EmptySelectionError(
                f"Curve '{label or grouping.observable}' has fewer than 2 "
                "points"
            )
        if len(np.unique(times)) != len(times):
            raise ValueError(
                f"Curve '{label or grouping.observable}' repeats times, "
                "group by more keys"
            )
        curves.append((label, times, values))
    return curves


def _draw_panel(
    svg: SvgBuilder,
    top: float,
    title: str,
    curves: List[Tuple[str, np.ndarray, np.ndarray]],
    observable: str,
) -> None:
    left = MARGIN_LEFT
    right = WIDTH - MARGIN_RIGHT
    upper = top + MARGIN_TOP
    lower = top + PANEL_HEIGHT - MARGIN_BOTTOM
    t_low = min(float(times[0]) for _, times, _ in curves)
    t_high = max(float(times[-1]) for _, times, _ in curves)
    y_low = min(float(values.min()) for _, _, values in curves)
    y_high = max(float(values.max()) for _, _, values in curves)
    pad = max(0.05 * (y_high - y_low), 0.05 * max(1.0, abs(y_high)))
    y_low, y_high = y_low - pad, y_high + pad

    def x_px(t: float) -> float:
        return left + (t - t_low) / (t_high - t_low) * (right - left)

    def y_px(y: float) -> float:
        return lower - (y - y_low) / (y_high - y_low) * (lower - upper)

    svg.text(WIDTH / 2, top + 28, title, anchor="middle", size=15)
    for value in _ticks(y_low, y_high):
        svg.line(left, y_px(value), right, y_px(value), stroke="#dddddd")
        svg.text(left - 8, y_px(value) + 4, f"{value:.3g}", anchor="end")
    for value in _ticks(t_low, t_high):
        svg.line(x_px(value), lower, x_px(value), lower + 5)
        svg.text(x_px(value), lower + 20, f"{value:.3g}", anchor="middle")
    svg.line(left, lower, right, lower, width=1.5)
    svg.line(left, upper, left, lower, width=1.5)
    svg.text((left + right) / 2, lower + 40, "t", anchor="middle")
    svg.text(left - 55, upper - 12, _AXIS_TITLES[observable])
    for index, (label, times, values) in enumerate(curves):
        color = COLORS[index % len(COLORS)]
        svg.polyline(
            [(x_px(t), y_px(y)) for t, y in zip(times, values)], stroke=color
        )
        legend_y = upper + 10 + 20 * index
        svg.line(
            right + 15, legend_y, right + 40, legend_y, stroke=color, width=2
        )
        svg.text(right + 46, legend_y + 4, label or observable)


def render_svg(
    table: pd.DataFrame, grouping: PlotGrouping, title: Optional[str] = None
) -> str:
    """Render a table as an SVG document.

    Parameters
    ----------
    table : pd.DataFrame
        The sweep table.
    grouping : PlotGrouping
        Which keys separate panels and curves, and the plotted column.
    title : Optional[str], optional
        The title, prefixed to each panel's own label.

    Returns
    -------
    str
        The document.

    Raises
    ------
    EmptySelectionError
        If the table is empty or a curve has fewer than two points.
    ValueError
        If a curve repeats a time (the grouping misses a varying key).
    """
    if table.empty:
        raise EmptySelectionError("Nothing to plot: the table is empty")
    if grouping.observable not in table.columns:
        raise EmptySelectionError(f"The table has no '{grouping.observable}'")
    panels = [
        (label, _curves(rows, grouping))
        for label, rows in _groups(table, grouping.panel_by)
    ]
    svg = SvgBuilder(WIDTH, PANEL_HEIGHT * len(panels))
    heading = title or _AXIS_TITLES[grouping.observable]
    for index, (label, curves) in enumerate(panels):
        panel_title = f"{heading} ({label})" if label else heading
        _draw_panel(
            svg, index * PANEL_HEIGHT, panel_title, curves, grouping.observable
        )
    return svg.get_svg()


def emit_svg(
    table: pd.DataFrame,
    grouping: PlotGrouping,
    path: Union[str, Path],
    title: Optional[str] = None,
) -> Path:
    """Write a table as an SVG line plot.

    Parameters
    ----------
    table : pd.DataFrame
        The sweep table.
    grouping : PlotGrouping
        Which keys separate panels and curves, and the plotted column.
    path : Union[str, Path]
        The output file; missing parent directories are created.
    title : Optional[str], optional
        The plot title.

    Returns
    -------
    Path
        The written file.

    Raises
    ------
    EmptySelectionError
        If the table is empty or a curve has fewer than two points.
    IsADirectoryError
        If the path is a directory.
    """
    output = Path(path)
    if output.is_dir():
        raise IsADirectoryError(f"Cannot write SVG to directory {output}")
    content = render_svg(table, grouping, title)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(content, encoding="utf-8", newline="\n")
    LOG.debug("Wrote plot to %s", output)
    return output


def default_grouping(config: SweepConfig) -> PlotGrouping:
    """Get a grouping that separates every swept value.

    One panel per system size (when both are swept), one curve per
    combination of the other swept keys.

    Parameters
    ----------
    config : SweepConfig
        The sweep.

    Returns
    -------
    PlotGrouping
        The grouping; the total probability is plotted if recorded,
        otherwise the excited-state probability.
    """
    swept = {
        "variant": len(config.variants),
        "beta": len(config.beta_values),
        "lambda": len(config.lambda_values),
        "n": len(config.n_values),
        "c0": len(config.c0_values),
    }
    curve_by = tuple(key for key, count in swept.items() if count > 1)
    return PlotGrouping(
        curve_by=curve_by or ("variant",),
        observable="p_total" if "total" in config.observables else "p_excited",
        panel_by=("l",) if len(config.qubits) > 1 else (),
    )
