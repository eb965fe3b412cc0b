# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Test fracqos.observables.witness.*."""

import numpy as np

from fracqos.observables import count_local_maxima, is_non_decreasing


def test_count_local_maxima() -> None:
    """Test strict interior peaks."""
    assert count_local_maxima([0, 1, 0, 2, 0]) == 2
    assert count_local_maxima([0, 1, 1, 0]) == 0
    assert count_local_maxima([1, 2]) == 0
    times = np.linspace(0, 4 * np.pi, 400)
    assert count_local_maxima(np.cos(times) ** 2) == 3


def test_count_local_maxima_margin() -> None:
    """Test that rounding noise does not count."""
    assert count_local_maxima([1.0, 1.0 + 1e-15, 1.0]) == 0
    assert count_local_maxima([1.0, 1.1, 1.0], tol=0.2) == 0


def test_is_non_decreasing() -> None:
    """Test monotone and dropping sequences."""
    assert is_non_decreasing([1.0, 1.0, 2.0, 1e6])
    assert is_non_decreasing([1.0, 1.0 - 1e-13])
    assert not is_non_decreasing([1.0, 0.9])
    assert is_non_decreasing([])
    assert is_non_decreasing([5.0])
