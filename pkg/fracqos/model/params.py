# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Model parameters and initial two-qubit amplitudes."""

import math
from typing import Tuple

from pydantic import Field, field_validator, model_validator
from typing_extensions import Annotated, Literal, Self

from ..common import FracQosBase

QubitCount = Literal[1, 2]
"""Supported numbers of qubits (each with its own cavity)."""


class ModelParams(FracQosBase):
    """Parameters of the resonant qubit-cavity model.

    Attributes
    ----------
    coupling : float
        The coupling lambda, in [0, 1].
    photon_number : int
        The cavity photon number n, non negative.
    qubits : QubitCount
        The number of qubits l.
    detuning : float
        The detuning, only 0 (resonance) is supported.
    """

    coupling: Annotated[
        float,
        Field(
            ...,
            ge=0.0,
            le=1.0,
            title="Coupling",
            description="The qubit-cavity coupling strength lambda.",
        ),
    ]
    photon_number: Annotated[
        int,
        Field(
            ...,
            ge=0,
            title="Photon number",
            description="The photon number n of each cavity.",
        ),
    ]
    qubits: Annotated[
        QubitCount,
        Field(
            1,
            title="Qubits",
            description="The number of qubits.",
        ),
    ]
    detuning: Annotated[
        float,
        Field(
            0.0,
            title="Detuning",
            description="The atom-cavity detuning (resonance only).",
        ),
    ]

    @field_validator("detuning")
    @classmethod
    def validate_detuning(cls, value: float) -> float:
        """Only the resonant case is modelled.

        Parameters
        ----------
        value : float
            The detuning.

        Returns
        -------
        float
            The validated detuning.

        Raises
        ------
        ValueError
            If the detuning is not zero.
        """
        if value != 0:
            raise ValueError(
                f"Only resonant dynamics (detuning 0) is supported, got {value}"
            )
        return value

    @property
    def rabi_frequency(self) -> float:
        """Get the effective coupling lambda * sqrt(n + 1)."""
        return self.coupling * math.sqrt(self.photon_number + 1)


class InitialState(FracQosBase):
    """Amplitudes of a |gg> + b |ee> (two qubits).

    Attributes
    ----------
    a : float
        Amplitude on |gg, n n>.
    b : float
        Amplitude on |ee, n n>.
    """

    a: Annotated[float, Field(..., ge=0.0, le=1.0)]
    b: Annotated[float, Field(..., ge=0.0, le=1.0)]

    @model_validator(mode="after")
    def validate_normalized(self) -> Self:
        """Validate a^2 + b^2 = 1.

        Returns
        -------
        InitialState
            The validated state.

        Raises
        ------
        ValueError
            If the amplitudes are not normalized.
        """
        norm = self.a * self.a + self.b * self.b
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"a^2 + b^2 must be 1, got {norm!r}")
        return self

    @classmethod
    def from_concurrence(cls, c0: float) -> "InitialState":
        """Create the state with initial concurrence c0.

        Parameters
        ----------
        c0 : float
            The concurrence, in [0, 1].

        Returns
        -------
        InitialState
            The state (b >= a branch).
        """
        a, b = ab_from_concurrence(c0)
        return cls(a=a, b=b)

    @property
    def concurrence(self) -> float:
        """Get the concurrence 2ab."""
        return 2.0 * self.a * self.b


def ab_from_concurrence(c0: float) -> Tuple[float, float]:
    """Solve 2ab = c0, a^2 + b^2 = 1 for a, b >= 0 with b >= a.

    b^2 = (1 + sqrt(1 - c0^2)) / 2 and a = c0 / (2b). With this branch
    P(|11>) = b^2 tends to 1 as c0 tends to 0.

    Parameters
    ----------
    c0 : float
        The concurrence, in [0, 1].

    Returns
    -------
    Tuple[float, float]
        The amplitudes (a, b).

    Raises
    ------
    ValueError
        If c0 is outside [0, 1].
    """
    if not 0.0 <= c0 <= 1.0:
        raise ValueError(f"The concurrence must be in [0, 1], got {c0}")
    b = math.sqrt((1.0 + math.sqrt(1.0 - c0 * c0)) / 2.0)
    a = c0 / (2.0 * b)
    return a, b
