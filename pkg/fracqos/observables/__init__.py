# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Reduced states and the probabilities read from them."""

from .density import SystemDensityMatrix, reduce, system_labels
from .probabilities import (
    DEGENERATE_TRACE,
    concurrence_initial,
    excited_probability,
    is_physical,
    total_probability,
)
from .witness import PEAK_TOL, count_local_maxima, is_non_decreasing

__all__ = [
    "DEGENERATE_TRACE",
    "PEAK_TOL",
    "SystemDensityMatrix",
    "concurrence_initial",
    "count_local_maxima",
    "excited_probability",
    "is_non_decreasing",
    "is_physical",
    "reduce",
    "system_labels",
    "total_probability",
]
