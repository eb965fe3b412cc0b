# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Composite (system x environment) basis and states over it."""

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Tuple

import numpy as np
import numpy.typing as npt

from ..errors import BasisMismatchError
from .params import ModelParams

SYSTEM_LEVELS = "ge"
"""Single-qubit levels, ground first."""


class BasisElement(NamedTuple):
    """One composite basis element.

    Attributes
    ----------
    system : str
        The qubit levels, one character per qubit ("g" or "e").
    environment : Tuple[int, ...]
        The photon occupation of each cavity.
    """

    system: str
    environment: Tuple[int, ...]

    def __str__(self) -> str:
        """Get the ket-like label, e.g. ``ge,(51,50)``."""
        occupation = ",".join(str(count) for count in self.environment)
        return f"{self.system},({occupation})"


@dataclass(frozen=True, slots=True)
class CompositeBasis:
    """The basis the dynamics acts on.

    Attributes
    ----------
    excitation : Tuple[BasisElement, ...]
        The elements coupled by the Hamiltonian, in matrix order.
    decoupled : Tuple[BasisElement, ...]
        Elements left invariant by the dynamics (|gg, n n> for two qubits).
    """

    excitation: Tuple[BasisElement, ...]
    decoupled: Tuple[BasisElement, ...] = ()

    @classmethod
    def for_model(cls, params: ModelParams) -> "CompositeBasis":
        """Build the basis of a model.

        Parameters
        ----------
        params : ModelParams
            The model parameters.

        Returns
        -------
        CompositeBasis
            The basis.
        """
        n = params.photon_number
        if params.qubits == 1:
            return cls(
                excitation=(
                    BasisElement("g", (n + 1,)),
                    BasisElement("e", (n,)),
                ),
            )
        return cls(
            excitation=(
                BasisElement("gg", (n + 1, n + 1)),
                BasisElement("ge", (n + 1, n)),
                BasisElement("eg", (n, n + 1)),
                BasisElement("ee", (n, n)),
            ),
            decoupled=(BasisElement("gg", (n, n)),),
        )

    @property
    def elements(self) -> Tuple[BasisElement, ...]:
        """Get all the elements, excitation block first."""
        return self.excitation + self.decoupled

    @property
    def excitation_size(self) -> int:
        """Get the dimension of the excitation block."""
        return len(self.excitation)

    def __len__(self) -> int:
        """Get the number of elements."""
        return len(self.excitation) + len(self.decoupled)

    def __iter__(self) -> Iterator[BasisElement]:
        """Iterate over all the elements."""
        return iter(self.elements)


@dataclass(frozen=True, slots=True)
class TaggedStateVector:
    """Complex amplitudes over labelled composite basis elements.

    Attributes
    ----------
    elements : Tuple[BasisElement, ...]
        The labels of the amplitudes.
    amplitudes : npt.NDArray[np.complex128]
        The amplitudes (read only).
    """

    elements: Tuple[BasisElement, ...]
    amplitudes: npt.NDArray[np.complex128]

    def __post_init__(self) -> None:
        """Validate the labels and freeze the amplitudes.

        Raises
        ------
        BasisMismatchError
            If the labels and amplitudes do not line up.
        """
        amplitudes = np.array(self.amplitudes, dtype=np.complex128)
        if amplitudes.ndim != 1 or amplitudes.size != len(self.elements):
            raise BasisMismatchError(
                f"{amplitudes.size} amplitudes for {len(self.elements)} "
                "basis elements"
            )
        if len(set(self.elements)) != len(self.elements):
            raise BasisMismatchError("Duplicate basis elements")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def from_basis(
        cls, basis: CompositeBasis, amplitudes: npt.ArrayLike
    ) -> "TaggedStateVector":
        """Create a state over a composite basis.

        Parameters
        ----------
        basis : CompositeBasis
            The basis.
        amplitudes : npt.ArrayLike
            The amplitudes, in the order of ``basis.elements``.

        Returns
        -------
        TaggedStateVector
            The state.
        """
        return cls(
            elements=basis.elements,
            amplitudes=np.asarray(amplitudes, dtype=np.complex128),
        )

    def amplitude(self, system: str, environment: Tuple[int, ...]) -> complex:
        """Get the amplitude of one element (0 if absent).

        Parameters
        ----------
        system : str
            The system label.
        environment : Tuple[int, ...]
            The environment label.

        Returns
        -------
        complex
            The amplitude.
        """
        element = BasisElement(system, tuple(environment))
        for index, known in enumerate(self.elements):
            if known == element:
                return complex(self.amplitudes[index])
        return 0j

    def norm_squared(self) -> float:
        """Get the squared norm of the state."""
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def __len__(self) -> int:
        """Get the number of amplitudes."""
        return len(self.elements)
