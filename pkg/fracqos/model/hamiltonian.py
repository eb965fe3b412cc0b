# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Resonant interaction Hamiltonians on the excitation block."""

import numpy as np
import numpy.typing as npt

from .params import ModelParams

_ONE_QUBIT = np.array([[0.0, 1.0], [1.0, 0.0]])
_TWO_QUBITS = np.array(
    [
        [0.0, 1.0, 1.0, 0.0],
        [1.0, 0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0, 1.0],
        [0.0, 1.0, 1.0, 0.0],
    ]
)


def build_hamiltonian(params: ModelParams) -> npt.NDArray[np.float64]:
    """Build the interaction Hamiltonian at resonance.

    In the excitation block of :class:`~fracqos.model.CompositeBasis` the
    Hamiltonian is the adjacency pattern of single photon exchanges scaled
    by lambda * sqrt(n + 1).

    Parameters
    ----------
    params : ModelParams
        The model parameters.

    Returns
    -------
    npt.NDArray[np.float64]
        The real symmetric 2x2 (one qubit) or 4x4 (two qubits) matrix.
    """
    pattern = _ONE_QUBIT if params.qubits == 1 else _TWO_QUBITS
    return params.rabi_frequency * pattern
