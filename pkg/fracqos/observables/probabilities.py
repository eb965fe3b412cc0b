# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Probability and entanglement observables."""

from ..errors import DegenerateStateError
from .density import SystemDensityMatrix

DEGENERATE_TRACE = 1e-14
"""Total probability at or below which ratios are undefined."""


def total_probability(rho: SystemDensityMatrix) -> float:
    """Get the total probability, the trace of rho.

    Parameters
    ----------
    rho : SystemDensityMatrix
        The reduced state.

    Returns
    -------
    float
        The trace (1 only for norm preserving dynamics).
    """
    return float(rho.diagonal().sum())


def excited_probability(rho: SystemDensityMatrix) -> float:
    """Get the probability of all qubits excited, |e> or |ee>.

    The population is divided by the total probability.

    Parameters
    ----------
    rho : SystemDensityMatrix
        The reduced state.

    Returns
    -------
    float
        rho[-1, -1] / trace(rho).

    Raises
    ------
    DegenerateStateError
        If the trace is at most 1e-14.
    """
    trace = total_probability(rho)
    if not trace > DEGENERATE_TRACE:
        raise DegenerateStateError(
            f"Total probability {trace!r} is too small for a ratio"
        )
    return float(rho.entries[-1, -1].real) / trace


def concurrence_initial(a: float, b: float) -> float:
    """Get the concurrence 2ab of a |gg> + b |ee>.

    Parameters
    ----------
    a : float
        Amplitude of |gg>.
    b : float
        Amplitude of |ee>.

    Returns
    -------
    float
        The concurrence.
    """
    return 2.0 * a * b


def is_physical(rho: SystemDensityMatrix, tol: float = 1e-10) -> bool:
    """Check positive semidefiniteness relative to the trace.

    Parameters
    ----------
    rho : SystemDensityMatrix
        The reduced state.
    tol : float, optional
        Allowed negative eigenvalue per unit trace, by default 1e-10.

    Returns
    -------
    bool
        True if the smallest eigenvalue is at least -tol * max(1, trace).
    """
    scale = max(1.0, abs(total_probability(rho)))
    return rho.min_eigenvalue() >= -tol * scale
