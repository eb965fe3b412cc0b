# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Deterministic spectral decomposition of the model Hamiltonians."""

from dataclasses import dataclass
from typing import List

import numpy as np
import numpy.typing as npt

from ..errors import NumericalFailureError

RESIDUAL_LIMIT = 1e-10
"""Largest accepted entrywise reconstruction error."""

_CLUSTER_TOL = 1e-10
_ZERO_TOL = 1e-13
_DEPENDENT_TOL = 1e-8


@dataclass(frozen=True, slots=True)
class SpectralDecomposition:
    """Eigenpairs of a real symmetric matrix.

    Attributes
    ----------
    eigenvalues : npt.NDArray[np.float64]
        The eigenvalues, in descending order.
    eigenvectors : npt.NDArray[np.float64]
        Orthonormal eigenvectors as columns, matching ``eigenvalues``.
    """

    eigenvalues: npt.NDArray[np.float64]
    eigenvectors: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        """Freeze the arrays."""
        for name in ("eigenvalues", "eigenvectors"):
            array = np.array(getattr(self, name), dtype=np.float64)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @property
    def dim(self) -> int:
        """Get the dimension."""
        return int(self.eigenvalues.size)

    def reconstruct(self) -> npt.NDArray[np.float64]:
        """Get sum_q alpha_q |u_q><u_q|."""
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.T

    def apply(
        self,
        factors: npt.ArrayLike,
        vector: npt.ArrayLike,
    ) -> npt.NDArray[np.complex128]:
        """Apply sum_q f_q |u_q><u_q| to a vector.

        Parameters
        ----------
        factors : npt.ArrayLike
            One scalar f_q per eigenvalue.
        vector : npt.ArrayLike
            The vector over the excitation block.

        Returns
        -------
        npt.NDArray[np.complex128]
            The transformed vector.
        """
        u = self.eigenvectors
        weights = np.asarray(factors, dtype=np.complex128)
        return u @ (weights * (u.T @ np.asarray(vector, dtype=np.complex128)))


def spectral_decompose(
    hamiltonian: npt.ArrayLike,
) -> SpectralDecomposition:
    """Decompose a real symmetric 2x2 or 4x4 matrix.

    Eigenvalues are sorted in descending order. A simple eigenvector is
    signed so that its first non-zero component is positive. A degenerate
    eigenspace is spanned by Gram-Schmidt on its projections of the unit
    vectors e_0, e_1, ... in basis order, so the result does not depend
    on the eigensolver's choice inside the eigenspace.

    Parameters
    ----------
    hamiltonian : npt.ArrayLike
        The matrix.

    Returns
    -------
    SpectralDecomposition
        The eigenpairs.

    Raises
    ------
    ValueError
        If the matrix is not a real symmetric 2x2 or 4x4 matrix.
    NumericalFailureError
        If the reconstruction error exceeds 1e-10.
    """
    matrix = np.asarray(hamiltonian)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Expected a square matrix, got {matrix.shape}")
    if matrix.shape[0] not in (2, 4):
        raise ValueError(f"Expected dimension 2 or 4, got {matrix.shape[0]}")
    if np.iscomplexobj(matrix):
        if np.any(matrix.imag != 0):
            raise ValueError("Expected a real matrix")
        matrix = matrix.real
    matrix = matrix.astype(np.float64)
    scale = max(1.0, float(np.max(np.abs(matrix))))
    if np.max(np.abs(matrix - matrix.T)) > 1e-12 * scale:
        raise ValueError("Expected a symmetric matrix")
    values, vectors = np.linalg.eigh(matrix)
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    eigenvalues = np.empty_like(values)
    eigenvectors = np.empty_like(vectors)
    for cluster in _clusters(values, _CLUSTER_TOL * scale):
        mean = float(np.mean(values[cluster]))
        if abs(mean) <= _ZERO_TOL * scale:
            mean = 0.0
        eigenvalues[cluster] = mean
        if len(cluster) == 1:
            eigenvectors[:, cluster[0]] = _signed(vectors[:, cluster[0]])
        else:
            eigenvectors[:, cluster] = _span_in_basis_order(
                vectors[:, cluster]
            )
    decomposition = SpectralDecomposition(eigenvalues, eigenvectors)
    residual = float(np.max(np.abs(decomposition.reconstruct() - matrix)))
    if residual > RESIDUAL_LIMIT * scale:
        raise NumericalFailureError(
            f"Spectral reconstruction residual {residual:.3g} exceeds "
            f"{RESIDUAL_LIMIT:g}"
        )
    return decomposition


def _clusters(values: npt.NDArray[np.float64], tol: float) -> List[List[int]]:
    groups: List[List[int]] = [[0]]
    for index in range(1, values.size):
        if values[groups[-1][-1]] - values[index] <= tol:
            groups[-1].append(index)
        else:
            groups.append([index])
    return groups


def _signed(vector: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    for component in vector:
        if abs(component) > _DEPENDENT_TOL:
            return vector if component > 0 else -vector
    return vector


def _span_in_basis_order(
    vectors: npt.NDArray[np.float64],
) -> npt.NDArray[np.float64]:
    projector = vectors @ vectors.T
    size = vectors.shape[1]
    chosen: List[npt.NDArray[np.float64]] = []
    for unit in np.eye(vectors.shape[0]):
        candidate = projector @ unit
        for previous in chosen:
            candidate = candidate - (previous @ candidate) * previous
        norm = float(np.linalg.norm(candidate))
        if norm > _DEPENDENT_TOL:
            chosen.append(candidate / norm)
        if len(chosen) == size:
            break
    if len(chosen) < size:
        raise NumericalFailureError(
            "Could not span a degenerate eigenspace from the unit vectors"
        )
    return np.column_stack(chosen)
