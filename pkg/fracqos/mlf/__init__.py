# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""The one-parameter Mittag-Leffler function E_beta(z), 0 < beta <= 1."""

from .contour import ContourPlan, contour_plans, ml_contour
from .dispatch import ml, uses_series
from .request import (
    DEFAULT_MAX_TERMS,
    DEFAULT_SERIES_RADIUS,
    DEFAULT_TOL,
    MIN_TOL,
    MlRequest,
)
from .series import ml_series, series_term_budget

__all__ = [
    "DEFAULT_MAX_TERMS",
    "DEFAULT_SERIES_RADIUS",
    "DEFAULT_TOL",
    "MIN_TOL",
    "ContourPlan",
    "MlRequest",
    "contour_plans",
    "ml",
    "ml_contour",
    "ml_series",
    "series_term_budget",
    "uses_series",
]
