# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Parameter sweeps, figure presets and their CSV and SVG outputs."""

from .config import (
    DEFAULT_BETA,
    DEFAULT_C0,
    DEFAULT_LAMBDA,
    DEFAULT_N,
    DEFAULT_T_MAX,
    DEFAULT_T_STEPS,
    Observable,
    SweepConfig,
)
from .csv_writer import FLOAT_FORMAT, csv_columns, format_csv, write_csv
from .parsing import KEY_ALIASES, config_from_mapping, load_config, parse_config
from .presets import (
    GROUP_KEYS,
    PRESETS,
    FigurePreset,
    PlotGrouping,
    PresetPanel,
    get_preset,
)
from .report import CurveSummary, oscillation_report
from .runner import (
    KEY_COLUMNS,
    OBSERVABLE_COLUMNS,
    CurveKey,
    SweepRunner,
    curve_keys,
    empty_table,
    evaluate_curve,
    rho_columns,
    run_sweep,
    table_columns,
    time_grid,
)
from .svg import SvgBuilder, default_grouping, emit_svg, render_svg

__all__ = [
    "DEFAULT_BETA",
    "DEFAULT_C0",
    "DEFAULT_LAMBDA",
    "DEFAULT_N",
    "DEFAULT_T_MAX",
    "DEFAULT_T_STEPS",
    "FLOAT_FORMAT",
    "GROUP_KEYS",
    "KEY_ALIASES",
    "KEY_COLUMNS",
    "OBSERVABLE_COLUMNS",
    "PRESETS",
    "CurveKey",
    "CurveSummary",
    "FigurePreset",
    "Observable",
    "PlotGrouping",
    "PresetPanel",
    "SvgBuilder",
    "SweepConfig",
    "SweepRunner",
    "config_from_mapping",
    "csv_columns",
    "curve_keys",
    "default_grouping",
    "emit_svg",
    "format_csv",
    "empty_table",
    "evaluate_curve",
    "get_preset",
    "load_config",
    "oscillation_report",
    "parse_config",
    "render_svg",
    "rho_columns",
    "run_sweep",
    "table_columns",
    "time_grid",
    "write_csv",
]
