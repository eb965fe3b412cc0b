# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Test fracqos.observables.density.*."""

import numpy as np
import pytest

from fracqos.errors import BasisMismatchError
from fracqos.model import (
    BasisElement,
    InitialState,
    ModelParams,
    TaggedStateVector,
    initial_state,
)
from fracqos.observables import (
    SystemDensityMatrix,
    is_physical,
    reduce,
    system_labels,
)
from fracqos.propagate import (
    EvolutionSpec,
    TfseVariant,
    closed_form_amplitudes,
    evolve,
    evolve_many,
)


def test_system_labels() -> None:
    """Test the computational basis labels."""
    assert system_labels(1) == ("g", "e")
    assert system_labels(2) == ("gg", "ge", "eg", "ee")


def test_reduce_one_qubit() -> None:
    """Test that different photon numbers do not interfere."""
    # Given
    psi = TaggedStateVector(
        elements=(BasisElement("g", (3,)), BasisElement("e", (2,))),
        amplitudes=np.array([0.6, 0.8j]),
    )
    # When
    rho = reduce(psi)
    # Then
    assert rho.qubits == 1
    assert rho.basis == ("g", "e")
    assert np.allclose(rho.entries, np.diag([0.36, 0.64]), atol=1e-15)


def test_reduce_shared_environment() -> None:
    """Test coherences between states with the same cavity labels."""
    psi = TaggedStateVector(
        elements=(BasisElement("gg", (1, 1)), BasisElement("ee", (1, 1))),
        amplitudes=np.array([0.6, 0.8]),
    )
    rho = reduce(psi)
    assert rho.dim == 4
    assert rho.entries[0, 3] == pytest.approx(0.48)
    assert rho.entries[3, 0] == pytest.approx(0.48)
    assert rho.is_hermitian()


def test_reduce_initial_two_qubit_state() -> None:
    """Test the populations of a |gg> + b |ee>."""
    init = InitialState.from_concurrence(0.5)
    params = ModelParams(coupling=0.5, photon_number=2, qubits=2)
    rho = reduce(initial_state(params, init))
    assert np.allclose(
        rho.diagonal(), [init.a**2, 0.0, 0.0, init.b**2], atol=1e-15
    )
    assert rho.min_eigenvalue() >= -1e-15


def test_reduce_mixed_label_lengths() -> None:
    """Test that one- and two-qubit labels cannot be mixed."""
    psi = TaggedStateVector(
        elements=(BasisElement("g", (1,)), BasisElement("ee", (1, 1))),
        amplitudes=np.array([1.0, 0.0]),
    )
    with pytest.raises(BasisMismatchError):
        reduce(psi)


def test_reduce_unknown_label() -> None:
    """Test labels that are not qubit levels."""
    psi = TaggedStateVector(
        elements=(BasisElement("x", (1,)),),
        amplitudes=np.array([1.0]),
    )
    with pytest.raises(BasisMismatchError):
        reduce(psi)


def test_reduce_environment_size() -> None:
    """Test an environment label with the wrong number of cavities."""
    psi = TaggedStateVector(
        elements=(BasisElement("e", (1, 1)),),
        amplitudes=np.array([1.0]),
    )
    with pytest.raises(BasisMismatchError):
        reduce(psi)


def test_density_matrix_shape() -> None:
    """Test the accepted shapes and read-only entries."""
    rho = SystemDensityMatrix(np.eye(2))
    with pytest.raises(ValueError):
        rho.entries[0, 0] = 2.0
    with pytest.raises(ValueError):
        SystemDensityMatrix(np.eye(3))


@pytest.mark.parametrize("variant", list(TfseVariant))
@pytest.mark.parametrize("beta", [0.2, 0.5, 0.9])
def test_evolved_states_are_physical(variant: TfseVariant, beta: float) -> None:
    """Test that every evolved state reduces to a Hermitian PSD matrix.

    Parameters
    ----------
    variant : TfseVariant
        The evolution law.
    beta : float
        The fractional order.
    """
    for qubits in (1, 2):
        # Given
        params = ModelParams(coupling=0.5, photon_number=50, qubits=qubits)
        init = InitialState.from_concurrence(0.5) if qubits == 2 else None
        spec = EvolutionSpec.build(variant, beta, params, init)
        # When
        states = evolve_many(spec, np.linspace(0.0, 20.0, 60))
        # Then
        for psi in states:
            rho = reduce(psi)
            assert rho.is_hermitian()
            assert is_physical(rho)
            if qubits == 2:
                stray = np.array(rho.entries)
                np.fill_diagonal(stray, 0.0)
                stray[0, 3] = stray[3, 0] = 0.0
                assert np.abs(stray).max() <= 1e-12


def test_one_qubit_diagonal_matches_printed_solution() -> None:
    """Test NaberI, beta = 0.5, lambda = 0.5, n = 50 at t = 1."""
    # Given
    params = ModelParams(coupling=0.5, photon_number=50, qubits=1)
    spec = EvolutionSpec.build(TfseVariant.NABER_I, 0.5, params)
    printed = closed_form_amplitudes(
        TfseVariant.NABER_I, params, None, 0.5, 1.0
    )
    # When
    rho = reduce(evolve(spec, 1.0))
    # Then
    expected = np.abs(printed.amplitudes) ** 2
    assert rho.basis == ("g", "e")
    assert np.allclose(rho.diagonal(), expected, rtol=0.0, atol=1e-10)
    assert rho.entries[0, 1] == 0.0
    # E_1/2(z) + E_1/2(-z) = 2 exp(z^2) with z^2 imaginary here
    assert rho.diagonal()[1] == pytest.approx(1.0, abs=1e-10)
    assert rho.diagonal()[0] > 0.5
