# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Common fixtures for tests."""

from pathlib import Path

import pytest

from fracqos.propagate import TfseVariant
from fracqos.sweeps import SweepConfig

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    """Get the directory of the checked-in test data.

    Returns
    -------
    Path
        The directory.
    """
    return DATA_DIR


@pytest.fixture(scope="function")
def small_sweep() -> SweepConfig:
    """Get a small sweep over both system sizes and two variants.

    Returns
    -------
    SweepConfig
        The sweep (2 variants x 2 sizes x 2 betas x 25 times).
    """
    return SweepConfig(
        variants=(TfseVariant.NEW, TfseVariant.NABER_I),
        qubits=(1, 2),
        beta_values=(0.9, 0.5),
        lambda_values=(0.5,),
        n_values=(2,),
        c0_values=(0.5,),
        t_max=5.0,
        t_steps=25,
    )


@pytest.fixture(scope="function")
def decoupled_sweep() -> SweepConfig:
    """Get the sweep behind the golden decoupled-limit CSV.

    Returns
    -------
    SweepConfig
        The sweep (NewTFSE, lambda = 0, three times).
    """
    return SweepConfig(
        variants=(TfseVariant.NEW,),
        qubits=(1, 2),
        beta_values=(0.5,),
        lambda_values=(0.0,),
        n_values=(0,),
        c0_values=(0.5,),
        t_max=1.0,
        t_steps=3,
    )
