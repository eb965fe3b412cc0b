# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Oscillation and monotonicity summary of a sweep table."""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np
import pandas as pd

from ..observables import count_local_maxima, is_non_decreasing
from .runner import KEY_COLUMNS

CURVE_COLUMNS = KEY_COLUMNS[:-1]
"""The key columns shared by the rows of a curve."""


@dataclass(frozen=True, slots=True)
class CurveSummary:
    """What a curve does over time.

    Attributes
    ----------
    variant : str
        The variant tag.
    qubits : int
        The system size l.
    beta : float
        The fractional order.
    coupling : float
        The coupling lambda.
    photons : int
        The photon number n.
    c0 : float
        The initial concurrence.
    excited_maxima : Optional[int]
        Strict local maxima of p_excited, None if not recorded.
    total_non_decreasing : Optional[bool]
        Whether p_total never drops, None if not recorded.
    """

    variant: str
    qubits: int
    beta: float
    coupling: float
    photons: int
    c0: float
    excited_maxima: Optional[int]
    total_non_decreasing: Optional[bool]

    def describe(self) -> str:
        """Get a one-line description."""
        head = (
            f"{self.variant} l={self.qubits} beta={self.beta:g} "
            f"lambda={self.coupling:g} n={self.photons} c0={self.c0:g}"
        )
        details = []
        if self.excited_maxima is not None:
            details.append(f"excited maxima={self.excited_maxima}")
        if self.total_non_decreasing is not None:
            trend = "non-decreasing" if self.total_non_decreasing else "varies"
            details.append(f"total {trend}")
        return f"{head}: {', '.join(details)}" if details else head


def _recorded(values: np.ndarray) -> Optional[np.ndarray]:
    return None if np.isnan(values).any() else values


def oscillation_report(table: pd.DataFrame) -> List[CurveSummary]:
    """Summarise every curve of a sweep table.

    Counts the strict local maxima (revivals) of p_excited and checks
    whether p_total never drops.

    Parameters
    ----------
    table : pd.DataFrame
        The sweep table.

    Returns
    -------
    List[CurveSummary]
        One summary per curve, in table order.
    """
    summaries: List[CurveSummary] = []
    if table.empty:
        return summaries
    for values, curve in table.groupby(list(CURVE_COLUMNS), sort=False):
        variant, qubits, beta, coupling, photons, c0 = values
        curve = curve.sort_values("t", kind="stable")
        excited = _recorded(curve["p_excited"].to_numpy(dtype=float))
        total = _recorded(curve["p_total"].to_numpy(dtype=float))
        summaries.append(
            CurveSummary(
                variant=str(variant),
                qubits=int(qubits),
                beta=float(beta),
                coupling=float(coupling),
                photons=int(photons),
                c0=float(c0),
                excited_maxima=(
                    None if excited is None else count_local_maxima(excited)
                ),
                total_non_decreasing=(
                    None if total is None else is_non_decreasing(total)
                ),
            )
        )
    return summaries
