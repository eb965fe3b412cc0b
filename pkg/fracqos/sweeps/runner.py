# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Run parameter sweeps.

A sweep is a set of curves, one per (variant, l, beta, lambda, n, c0), each
sampled on the same time grid. Curves are independent: the async runner
evaluates them in worker threads and assembles the table in curve order,
so the output does not depend on the schedule.
"""

import logging
from itertools import product
from types import TracebackType
from typing import Dict, List, NamedTuple, Optional, Tuple, Type, Union

import anyio
import numpy as np
import numpy.typing as npt
import pandas as pd
from asyncer import asyncify

from ..errors import NumericalError, SweepPointError
from ..mlf import DEFAULT_TOL
from ..model import InitialState, ModelParams
from ..observables import excited_probability, reduce, total_probability
from ..propagate import EvolutionSpec, TfseVariant, evolve
from .config import SweepConfig

LOG = logging.getLogger(__name__)

KEY_COLUMNS = ("variant", "l", "beta", "lambda", "n", "c0", "t")
"""The columns identifying a row, in sort order."""

OBSERVABLE_COLUMNS = ("p_total", "p_excited")
"""The observable columns always present in a table."""

DEFAULT_WORKERS = 4
"""Curves evaluated at the same time by :meth:`SweepRunner.a_run`."""


class CurveKey(NamedTuple):
    """The parameters shared by all rows of a curve."""

    variant: TfseVariant
    qubits: int
    beta: float
    coupling: float
    photons: int
    c0: float


def rho_columns(config: SweepConfig) -> Tuple[str, ...]:
    """Get the diagonal density-matrix columns of a sweep.

    Parameters
    ----------
    config : SweepConfig
        The sweep.

    Returns
    -------
    Tuple[str, ...]
        ``rho_1`` ... ``rho_d`` (d = 2 or 4) if ``rho_diag`` is requested,
        otherwise nothing.
    """
    if "rho_diag" not in config.observables:
        return ()
    dim = 2 ** max(config.qubits)
    return tuple(f"rho_{index}" for index in range(1, dim + 1))


def table_columns(config: SweepConfig) -> Tuple[str, ...]:
    """Get the columns of a sweep table, in order.

    Parameters
    ----------
    config : SweepConfig
        The sweep.

    Returns
    -------
    Tuple[str, ...]
        The key columns, the observables, then any ``rho_`` columns.
    """
    return KEY_COLUMNS + OBSERVABLE_COLUMNS + rho_columns(config)


def curve_keys(config: SweepConfig) -> List[CurveKey]:
    """Get the curves of a sweep in row order.

    Variants follow their table order (NaberI, NaberII, XGF, NewTFSE), the
    other axes ascend.

    Parameters
    ----------
    config : SweepConfig
        The sweep.

    Returns
    -------
    List[CurveKey]
        The curves.
    """
    variants = sorted(config.variants, key=lambda variant: variant.info.ordinal)
    return [
        CurveKey(*values)
        for values in product(
            variants,
            sorted(config.qubits),
            sorted(config.beta_values),
            sorted(config.lambda_values),
            sorted(config.n_values),
            sorted(config.c0_values),
        )
    ]


def time_grid(config: SweepConfig) -> npt.NDArray[np.float64]:
    """Get the equally spaced times [0, t_max] of a sweep.

    Parameters
    ----------
    config : SweepConfig
        The sweep.

    Returns
    -------
    npt.NDArray[np.float64]
        ``t_steps`` times from 0 to ``t_max``, both included.
    """
    return np.linspace(0.0, config.t_max, config.t_steps)


def evaluate_curve(
    config: SweepConfig, key: CurveKey, tol: float = DEFAULT_TOL
) -> pd.DataFrame:
    """Evaluate one curve.

    Parameters
    ----------
    config : SweepConfig
        The sweep (time grid and observables).
    key : CurveKey
        The curve.
    tol : float, optional
        Accuracy target of the Mittag-Leffler evaluations.

    Returns
    -------
    pd.DataFrame
        One row per time, with :func:`table_columns`; unrequested
        observables are NaN.

    Raises
    ------
    SweepPointError
        If a point fails numerically.
    """
    times = time_grid(config)
    columns = table_columns(config)
    rho_names = rho_columns(config)
    want_total = "total" in config.observables
    want_excited = "excited" in config.observables
    data: Dict[str, npt.NDArray[np.float64]] = {
        name: np.full(len(times), np.nan)
        for name in OBSERVABLE_COLUMNS + rho_names
    }
    current = 0.0
    try:
        params = ModelParams(
            coupling=key.coupling,
            photon_number=key.photons,
            qubits=key.qubits,
        )
        init = (
            InitialState.from_concurrence(key.c0) if key.qubits == 2 else None
        )
        spec = EvolutionSpec.build(key.variant, key.beta, params, init, tol)
        for index, t in enumerate(times):
            current = float(t)
            rho = reduce(evolve(spec, current))
            if want_total:
                data["p_total"][index] = total_probability(rho)
            if want_excited:
                data["p_excited"][index] = excited_probability(rho)
            for name, value in zip(rho_names, rho.diagonal()):
                data[name][index] = value
    except NumericalError as error:
        raise SweepPointError(
            (
                key.variant.value,
                key.qubits,
                key.beta,
                key.coupling,
                key.photons,
                key.c0,
                current,
            ),
            error,
        ) from error
    frame = pd.DataFrame(
        {
            "variant": [key.variant.value] * len(times),
            "l": np.full(len(times), key.qubits, dtype=np.int64),
            "beta": np.full(len(times), key.beta),
            "lambda": np.full(len(times), key.coupling),
            "n": np.full(len(times), key.photons, dtype=np.int64),
            "c0": np.full(len(times), key.c0),
            "t": times,
            **data,
        }
    )
    return frame[list(columns)]


def empty_table(config: Optional[SweepConfig] = None) -> pd.DataFrame:
    """Get a table without rows.

    Parameters
    ----------
    config : Optional[SweepConfig], optional
        The sweep whose columns to use, by default the fixed columns only.

    Returns
    -------
    pd.DataFrame
        The empty table.
    """
    columns = (
        table_columns(config)
        if config is not None
        else KEY_COLUMNS + OBSERVABLE_COLUMNS
    )
    return pd.DataFrame({name: [] for name in columns})


def _assemble(config: SweepConfig, frames: List[pd.DataFrame]) -> pd.DataFrame:
    if not frames:
        return empty_table(config)
    return pd.concat(frames, ignore_index=True)


class SweepRunner:
    """Evaluate a sweep, synchronously or in worker threads."""

    def __init__(
        self,
        config: SweepConfig,
        tol: float = DEFAULT_TOL,
        workers: int = DEFAULT_WORKERS,
    ) -> None:
        """Initialize the runner.

        Parameters
        ----------
        config : SweepConfig
            The sweep.
        tol : float, optional
            Accuracy target of the Mittag-Leffler evaluations.
        workers : int, optional
            Curves evaluated at the same time by :meth:`a_run`.

        Raises
        ------
        ValueError
            If workers is not positive.
        """
        if workers < 1:
            raise ValueError(f"workers must be positive, got {workers}")
        self._config = config
        self._tol = tol
        self._workers = workers
        self._running = False

    def __enter__(self) -> "SweepRunner":
        """Enter the context manager."""
        return self

    async def __aenter__(self) -> "SweepRunner":
        """Enter the context manager asynchronously."""
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc_value: Optional[BaseException],
        traceback: Optional[TracebackType],
    ) -> None:
        """Exit the context manager."""
        self._running = False

    async def __aexit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc_value: Optional[BaseException],
        traceback: Optional[TracebackType],
    ) -> None:
        """Exit the context manager asynchronously."""
        self._running = False

    @property
    def config(self) -> SweepConfig:
        """Get the sweep."""
        return self._config

    @property
    def running(self) -> bool:
        """Get the running status."""
        return self._running

    def run(self) -> pd.DataFrame:
        """Evaluate the sweep.

        Returns
        -------
        pd.DataFrame
            The result table, rows in key order.

        Raises
        ------
        RuntimeError
            If the runner is already running.
        SweepPointError
            If a point fails numerically.
        """
        if self._running is True:
            raise RuntimeError("Sweep already running")
        self._running = True
        try:
            frames = []
            for key in curve_keys(self._config):
                LOG.debug("Evaluating curve %s", key)
                frames.append(evaluate_curve(self._config, key, self._tol))
            return _assemble(self._config, frames)
        finally:
            self._running = False

    async def a_run(self) -> pd.DataFrame:
        """Evaluate the sweep, curves in worker threads.

        Returns
        -------
        pd.DataFrame
            The result table, identical to :meth:`run`.

        Raises
        ------
        RuntimeError
            If the runner is already running.
        SweepPointError
            If a point fails numerically.
        Exception
            Whatever a worker raised; the first failing curve in row order
            is reported, never a group of errors.
        """
        if self._running is True:
            raise RuntimeError("Sweep already running")
        self._running = True
        try:
            keys = curve_keys(self._config)
            slots: List[Union[pd.DataFrame, BaseException, None]] = [
                None
            ] * len(keys)
            limiter = anyio.CapacityLimiter(self._workers)
            evaluate = asyncify(evaluate_curve, limiter=limiter)

            async def _fill(index: int, key: CurveKey) -> None:
                LOG.debug("Evaluating curve %s", key)
                try:
                    slots[index] = await evaluate(self._config, key, self._tol)
                except Exception as error:  # pylint: disable=broad-except
                    slots[index] = error

            async with anyio.create_task_group() as group:
                for index, key in enumerate(keys):
                    group.start_soon(_fill, index, key)
            frames: List[pd.DataFrame] = []
            for slot in slots:
                if isinstance(slot, BaseException):
                    raise slot
                if slot is not None:
                    frames.append(slot)
            return _assemble(self._config, frames)
        finally:
            self._running = False


def run_sweep(config: SweepConfig, tol: float = DEFAULT_TOL) -> pd.DataFrame:
    """Evaluate a sweep.

    Parameters
    ----------
    config : SweepConfig
        The sweep.
    tol : float, optional
        Accuracy target of the Mittag-Leffler evaluations.

    Returns
    -------
    pd.DataFrame
        One row per (variant, l, beta, lambda, n, c0, t), in that sort
        order, with ``p_total``, ``p_excited`` and any ``rho_`` columns.

    Raises
    ------
    SweepPointError
        If a point fails numerically.
    """
    with SweepRunner(config, tol=tol) as runner:
        return runner.run()
