# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Shape tests on sampled curves (oscillations, monotonicity)."""

from typing import Sequence

import numpy as np

PEAK_TOL = 1e-12
"""Margin a sample must exceed both neighbours by to count as a peak."""


def count_local_maxima(values: Sequence[float], tol: float = PEAK_TOL) -> int:
    """Count strict three-point local maxima.

    Parameters
    ----------
    values : Sequence[float]
        The samples, on a fixed grid.
    tol : float, optional
        The margin, by default 1e-12.

    Returns
    -------
    int
        The number of interior samples above both neighbours by ``tol``.
    """
    samples = np.asarray(values, dtype=float)
    if samples.size < 3:
        return 0
    middle = samples[1:-1]
    peaks = (middle > samples[:-2] + tol) & (middle > samples[2:] + tol)
    return int(np.count_nonzero(peaks))


def is_non_decreasing(
    values: Sequence[float], rel_tol: float = PEAK_TOL
) -> bool:
    """Check that samples never drop (beyond a relative tolerance).

    Parameters
    ----------
    values : Sequence[float]
        The samples.
    rel_tol : float, optional
        Allowed drop relative to max(1, |sample|), by default 1e-12.

    Returns
    -------
    bool
        True if the sequence is non decreasing.
    """
    samples = np.asarray(values, dtype=float)
    if samples.size < 2:
        return True
    allowed = rel_tol * np.maximum(1.0, np.abs(samples[:-1]))
    return bool(np.all(np.diff(samples) >= -allowed))
