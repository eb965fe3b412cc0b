# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Reduced density matrix of the qubits."""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Tuple

import numpy as np
import numpy.typing as npt

from ..errors import BasisMismatchError
from ..model import SYSTEM_LEVELS, TaggedStateVector


def system_labels(qubits: int) -> Tuple[str, ...]:
    """Get the computational basis labels, e.g. ("gg", "ge", "eg", "ee").

    Parameters
    ----------
    qubits : int
        The number of qubits.

    Returns
    -------
    Tuple[str, ...]
        The labels, ground state first.
    """
    return tuple(
        "".join(levels) for levels in product(SYSTEM_LEVELS, repeat=qubits)
    )


@dataclass(frozen=True, slots=True)
class SystemDensityMatrix:
    """Density matrix of the qubits after tracing out the cavities.

    The trace is not normalized: it is the total probability.

    Attributes
    ----------
    entries : npt.NDArray[np.complex128]
        The 2x2 or 4x4 matrix (read only).
    """

    entries: npt.NDArray[np.complex128]

    def __post_init__(self) -> None:
        """Validate the shape and freeze the entries.

        Raises
        ------
        ValueError
            If the matrix is not 2x2 or 4x4.
        """
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.shape not in ((2, 2), (4, 4)):
            raise ValueError(
                f"Expected a 2x2 or 4x4 matrix, got {entries.shape}"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        """Get the dimension (2 or 4)."""
        return int(self.entries.shape[0])

    @property
    def qubits(self) -> int:
        """Get the number of qubits."""
        return 1 if self.dim == 2 else 2

    @property
    def basis(self) -> Tuple[str, ...]:
        """Get the labels of rows and columns."""
        return system_labels(self.qubits)

    def diagonal(self) -> npt.NDArray[np.float64]:
        """Get the populations."""
        return np.real(np.diag(self.entries)).copy()

    def min_eigenvalue(self) -> float:
        """Get the smallest eigenvalue."""
        return float(np.linalg.eigvalsh(self.entries)[0])

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        """Check hermiticity entrywise.

        Parameters
        ----------
        atol : float, optional
            Absolute tolerance, by default 1e-12.

        Returns
        -------
        bool
            True if rho equals its conjugate transpose.
        """
        difference = self.entries - self.entries.conj().T
        return bool(np.max(np.abs(difference)) <= atol)


def reduce(psi: TaggedStateVector) -> SystemDensityMatrix:
    """Trace out the cavities.

    rho[s, s'] = sum over environment labels env of
    amp(s, env) conj(amp(s', env)); amplitudes whose environment labels
    differ never interfere.

    Parameters
    ----------
    psi : TaggedStateVector
        The total-system state.

    Returns
    -------
    SystemDensityMatrix
        The reduced state.

    Raises
    ------
    BasisMismatchError
        If the system labels are not qubit labels of one common length.
    """
    lengths = {len(element.system) for element in psi.elements}
    if len(lengths) != 1 or lengths.pop() not in (1, 2):
        raise BasisMismatchError(
            "All system labels must describe the same 1 or 2 qubits"
        )
    qubits = len(psi.elements[0].system)
    labels = system_labels(qubits)
    position = {label: index for index, label in enumerate(labels)}
    rows: Dict[Tuple[int, ...], npt.NDArray[np.complex128]] = {}
    for element, amplitude in zip(psi.elements, psi.amplitudes):
        if element.system not in position:
            raise BasisMismatchError(
                f"Unknown system label '{element.system}'"
            )
        if len(element.environment) != qubits:
            raise BasisMismatchError(
                f"Environment label {element.environment} does not match "
                f"{qubits} cavities"
            )
        row = rows.setdefault(
            element.environment, np.zeros(len(labels), dtype=np.complex128)
        )
        row[position[element.system]] = amplitude
    vectors = np.array([rows[env] for env in sorted(rows)])
    rho = vectors.T @ vectors.conj()
    return SystemDensityMatrix(0.5 * (rho + rho.conj().T))
