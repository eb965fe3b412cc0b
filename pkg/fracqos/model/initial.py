# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Initial total-system states."""

from typing import Optional

import numpy as np

from .basis import CompositeBasis, TaggedStateVector
from .params import InitialState, ModelParams


def initial_state(
    params: ModelParams, init: Optional[InitialState] = None
) -> TaggedStateVector:
    """Build the initial state of the total system.

    One qubit starts in |e, n>. Two qubits start in a |gg, n n> + b |ee, n n>;
    the |gg, n n> part is the decoupled element of the basis.

    Parameters
    ----------
    params : ModelParams
        The model parameters.
    init : Optional[InitialState], optional
        The two-qubit amplitudes. Ignored for one qubit; required for two.

    Returns
    -------
    TaggedStateVector
        The initial state over ``CompositeBasis.for_model(params)``.

    Raises
    ------
    ValueError
        If two qubits are requested without amplitudes.
    """
    basis = CompositeBasis.for_model(params)
    amplitudes = np.zeros(len(basis), dtype=np.complex128)
    if params.qubits == 1:
        amplitudes[1] = 1.0
        return TaggedStateVector.from_basis(basis, amplitudes)
    if init is None:
        raise ValueError("Two qubits need initial amplitudes (a, b)")
    amplitudes[3] = init.b
    amplitudes[4] = init.a
    return TaggedStateVector.from_basis(basis, amplitudes)
