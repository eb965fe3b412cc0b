# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Test fracqos.sweeps.report.*."""

import numpy as np
import pandas as pd

from fracqos.sweeps import (
    SweepConfig,
    empty_table,
    oscillation_report,
    run_sweep,
)


def test_one_summary_per_curve(small_sweep: SweepConfig) -> None:
    """Test the curves and their order.

    Parameters
    ----------
    small_sweep : SweepConfig
        A small sweep.
    """
    summaries = oscillation_report(run_sweep(small_sweep))
    assert len(summaries) == 8
    assert summaries[0].variant == "naber1"
    assert summaries[0].qubits == 1
    assert summaries[0].beta == 0.5
    assert summaries[-1].variant == "new"
    assert summaries[-1].qubits == 2


def test_counts_and_trend() -> None:
    """Test a hand-made oscillating curve."""
    times = np.linspace(0.0, 4 * np.pi, 200)
    table = pd.DataFrame(
        {
            "variant": "new",
            "l": 1,
            "beta": 1.0,
            "lambda": 0.5,
            "n": 0,
            "c0": 0.5,
            "t": times,
            "p_total": np.ones_like(times),
            "p_excited": np.cos(times) ** 2,
        }
    )
    (summary,) = oscillation_report(table)
    assert summary.excited_maxima == 3
    assert summary.total_non_decreasing is True
    assert summary.describe() == (
        "new l=1 beta=1 lambda=0.5 n=0 c0=0.5: "
        "excited maxima=3, total non-decreasing"
    )


def test_unrecorded_observables() -> None:
    """Test curves without the observables."""
    config = SweepConfig(
        variants=("xgf",), t_max=1.0, t_steps=4, observables=("excited",)
    )
    (summary,) = oscillation_report(run_sweep(config))
    assert summary.total_non_decreasing is None
    assert summary.excited_maxima is not None
    assert oscillation_report(empty_table()) == []
