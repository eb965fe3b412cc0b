# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Test fracqos.model.basis.*."""

import numpy as np
import pytest

from fracqos.errors import BasisMismatchError
from fracqos.model import (
    BasisElement,
    CompositeBasis,
    ModelParams,
    TaggedStateVector,
)


def test_one_qubit_basis() -> None:
    """Test the one-qubit excitation block."""
    params = ModelParams(coupling=0.5, photon_number=50)
    basis = CompositeBasis.for_model(params)
    assert [str(element) for element in basis] == ["g,(51)", "e,(50)"]
    assert basis.decoupled == ()
    assert len(basis) == basis.excitation_size == 2


def test_two_qubit_basis() -> None:
    """Test the two-qubit block and its decoupled element."""
    params = ModelParams(coupling=0.5, photon_number=0, qubits=2)
    basis = CompositeBasis.for_model(params)
    assert [str(element) for element in basis.excitation] == [
        "gg,(1,1)",
        "ge,(1,0)",
        "eg,(0,1)",
        "ee,(0,0)",
    ]
    assert basis.decoupled == (BasisElement("gg", (0, 0)),)
    assert len(basis) == 5
    assert basis.excitation_size == 4


def test_tagged_state_vector() -> None:
    """Test amplitudes by label and the norm."""
    params = ModelParams(coupling=0.5, photon_number=2)
    basis = CompositeBasis.for_model(params)
    psi = TaggedStateVector.from_basis(basis, [0.6, 0.8j])
    assert psi.amplitude("e", (2,)) == 0.8j
    assert psi.amplitude("e", (7,)) == 0j
    assert psi.norm_squared() == pytest.approx(1.0)
    assert len(psi) == 2
    with pytest.raises(ValueError):
        psi.amplitudes[0] = 1.0


def test_tagged_state_vector_mismatch() -> None:
    """Test inconsistent labels."""
    element = BasisElement("g", (1,))
    with pytest.raises(BasisMismatchError):
        TaggedStateVector((element,), np.array([1.0, 0.0]))
    with pytest.raises(BasisMismatchError):
        TaggedStateVector((element, element), np.array([1.0, 0.0]))
