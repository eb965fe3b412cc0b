# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Sweep configuration."""

from pathlib import Path
from typing import Optional, Tuple

from pydantic import Field, field_validator
from typing_extensions import Annotated, Literal

from ..common import FracQosBase
from ..model import QubitCount
from ..propagate import TfseVariant

Observable = Literal["total", "excited", "rho_diag"]
"""Observables a sweep can record."""

DEFAULT_BETA = 0.5
DEFAULT_LAMBDA = 0.5
DEFAULT_N = 50
DEFAULT_C0 = 0.5
DEFAULT_T_MAX = 20.0
DEFAULT_T_STEPS = 400

Beta = Annotated[float, Field(gt=0.0, le=1.0)]
Coupling = Annotated[float, Field(ge=0.0, le=1.0)]
PhotonNumber = Annotated[int, Field(ge=0)]
Concurrence = Annotated[float, Field(ge=0.0, le=1.0)]


class SweepConfig(FracQosBase):
    """A parameter sweep over (variant, l, beta, lambda, n, c0, t).

    Attributes
    ----------
    variants : Tuple[TfseVariant, ...]
        The evolution laws, all four by default.
    qubits : Tuple[QubitCount, ...]
        The system sizes l, (1,) by default.
    beta_values : Tuple[float, ...]
        The fractional orders, each in (0, 1].
    lambda_values : Tuple[float, ...]
        The couplings, each in [0, 1].
    n_values : Tuple[int, ...]
        The photon numbers, each non negative.
    c0_values : Tuple[float, ...]
        The initial concurrences, each in [0, 1] (two qubits only).
    t_max : float
        The end of the time grid [0, t_max].
    t_steps : int
        The number of time points, at least 2.
    observables : Tuple[Observable, ...]
        The recorded observables.
    csv_path : Optional[Path]
        Where to write the CSV table.
    svg_path : Optional[Path]
        Where to write the SVG plot.
    """

    variants: Annotated[
        Tuple[TfseVariant, ...],
        Field(
            tuple(TfseVariant),
            min_length=1,
            title="Variants",
            description="The evolution laws to sweep.",
        ),
    ]
    qubits: Annotated[
        Tuple[QubitCount, ...],
        Field(
            (1,),
            min_length=1,
            title="Qubits",
            description="The system sizes to sweep.",
        ),
    ]
    beta_values: Annotated[
        Tuple[Beta, ...],
        Field(
            (DEFAULT_BETA,),
            min_length=1,
            title="Orders",
            description="The fractional orders to sweep.",
        ),
    ]
    lambda_values: Annotated[
        Tuple[Coupling, ...],
        Field(
            (DEFAULT_LAMBDA,),
            min_length=1,
            title="Couplings",
            description="The coupling strengths to sweep.",
        ),
    ]
    n_values: Annotated[
        Tuple[PhotonNumber, ...],
        Field(
            (DEFAULT_N,),
            min_length=1,
            title="Photon numbers",
            description="The cavity photon numbers to sweep.",
        ),
    ]
    c0_values: Annotated[
        Tuple[Concurrence, ...],
        Field(
            (DEFAULT_C0,),
            min_length=1,
            title="Concurrences",
            description="The initial two-qubit concurrences to sweep.",
        ),
    ]
    t_max: Annotated[
        float,
        Field(
            DEFAULT_T_MAX,
            gt=0.0,
            title="End time",
            description="The end of the (dimensionless) time grid.",
        ),
    ]
    t_steps: Annotated[
        int,
        Field(
            DEFAULT_T_STEPS,
            ge=2,
            title="Time steps",
            description="The number of equally spaced time points.",
        ),
    ]
    observables: Annotated[
        Tuple[Observable, ...],
        Field(
            ("total", "excited"),
            min_length=1,
            title="Observables",
            description="The observables to record.",
        ),
    ]
    csv_path: Annotated[
        Optional[Path],
        Field(None, title="CSV path", description="The CSV output file."),
    ]
    svg_path: Annotated[
        Optional[Path],
        Field(None, title="SVG path", description="The SVG output file."),
    ]

    @field_validator(
        "variants",
        "qubits",
        "beta_values",
        "lambda_values",
        "n_values",
        "c0_values",
        "observables",
    )
    @classmethod
    def validate_unique(cls, value: Tuple[object, ...]) -> Tuple[object, ...]:
        """Reject repeated values (they would duplicate rows).

        Parameters
        ----------
        value : Tuple[object, ...]
            The swept values.

        Returns
        -------
        Tuple[object, ...]
            The validated values.

        Raises
        ------
        ValueError
            If a value is repeated.
        """
        if len(set(value)) != len(value):
            raise ValueError(f"Repeated values in {list(value)}")
        return value

    @property
    def row_count(self) -> int:
        """Get the number of rows the sweep produces."""
        return (
            len(self.variants)
            * len(self.qubits)
            * len(self.beta_values)
            * len(self.lambda_values)
            * len(self.n_values)
            * len(self.c0_values)
            * self.t_steps
        )
