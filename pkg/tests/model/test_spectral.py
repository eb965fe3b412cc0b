# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Test fracqos.model.spectral.*."""

import math

import numpy as np
import pytest

from fracqos.model import ModelParams, build_hamiltonian, spectral_decompose


def test_one_qubit() -> None:
    """Test the eigenpairs of the 2x2 Hamiltonian."""
    params = ModelParams(coupling=0.5, photon_number=3)
    spectrum = spectral_decompose(build_hamiltonian(params))
    edge = math.sqrt(0.5)
    assert np.allclose(spectrum.eigenvalues, [1.0, -1.0], atol=1e-15)
    assert np.allclose(
        spectrum.eigenvectors, [[edge, edge], [edge, -edge]], atol=1e-15
    )


def test_two_qubits_degenerate_span() -> None:
    """Test the zero eigenspace spanned in basis order."""
    params = ModelParams(coupling=1.0, photon_number=0, qubits=2)
    spectrum = spectral_decompose(build_hamiltonian(params))
    edge = math.sqrt(0.5)
    assert np.allclose(spectrum.eigenvalues, [2.0, 0.0, 0.0, -2.0])
    assert spectrum.eigenvalues[1] == spectrum.eigenvalues[2] == 0.0
    expected = np.array(
        [
            [0.5, edge, 0.0, 0.5],
            [0.5, 0.0, edge, -0.5],
            [0.5, 0.0, -edge, -0.5],
            [0.5, -edge, 0.0, 0.5],
        ]
    )
    assert np.allclose(spectrum.eigenvectors, expected, atol=1e-12)


def test_orthonormal_and_reconstructs() -> None:
    """Test U^T U = 1 and U diag U^T = H."""
    for coupling in (0.05, 0.5, 1.0):
        params = ModelParams(coupling=coupling, photon_number=40, qubits=2)
        matrix = build_hamiltonian(params)
        spectrum = spectral_decompose(matrix)
        vectors = spectrum.eigenvectors
        assert np.allclose(vectors.T @ vectors, np.eye(4), atol=1e-12)
        assert np.allclose(spectrum.reconstruct(), matrix, atol=1e-12)
        assert spectrum.dim == 4


def test_apply() -> None:
    """Test a matrix function applied to a vector."""
    spectrum = spectral_decompose(np.array([[0.0, 2.0], [2.0, 0.0]]))
    result = spectrum.apply([1.0, 1.0], np.array([0.3, 0.4j]))
    assert np.allclose(result, [0.3, 0.4j])


def test_zero_matrix() -> None:
    """Test the decoupled (all zero) Hamiltonian."""
    spectrum = spectral_decompose(np.zeros((4, 4)))
    assert not spectrum.eigenvalues.any()
    assert np.allclose(spectrum.eigenvectors, np.eye(4), atol=1e-15)


@pytest.mark.parametrize(
    "matrix",
    [
        np.zeros((3, 3)),
        np.zeros((2, 3)),
        np.array([[0.0, 1.0], [2.0, 0.0]]),
        np.array([[0.0, 1j], [-1j, 0.0]]),
    ],
)
def test_invalid(matrix: np.ndarray) -> None:
    """Test non-square, unsupported, asymmetric and complex matrices.

    Parameters
    ----------
    matrix : np.ndarray
        The invalid matrix.
    """
    with pytest.raises(ValueError):
        spectral_decompose(matrix)
