# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Validated arguments of a Mittag-Leffler evaluation."""

import cmath

from pydantic import Field, field_validator
from typing_extensions import Annotated

from ..common import FracQosBase

DEFAULT_TOL = 1e-12
"""Default relative accuracy target."""

MIN_TOL = 1e-14
"""Smallest accepted accuracy target (double precision resolution)."""

DEFAULT_SERIES_RADIUS = 5.0
"""Largest |z| handled by the power series."""

DEFAULT_MAX_TERMS = 20_000
"""Smallest term budget of the power series."""


class MlRequest(FracQosBase):
    """Arguments of E_beta(z).

    Attributes
    ----------
    beta : float
        The order, in (0, 1].
    z : complex
        The argument.
    tol : float
        Relative accuracy target, at least 1e-14.
    """

    beta: Annotated[
        float,
        Field(
            ...,
            gt=0.0,
            le=1.0,
            title="Order",
            description="The order of the Mittag-Leffler function.",
        ),
    ]
    z: Annotated[
        complex,
        Field(
            ...,
            title="Argument",
            description="The (dimensionless) complex argument.",
        ),
    ]
    tol: Annotated[
        float,
        Field(
            DEFAULT_TOL,
            ge=MIN_TOL,
            title="Tolerance",
            description="The relative accuracy target.",
        ),
    ]

    @field_validator("z")
    @classmethod
    def validate_z(cls, value: complex) -> complex:
        """Reject non-finite arguments.

        Parameters
        ----------
        value : complex
            The argument.

        Returns
        -------
        complex
            The validated argument.

        Raises
        ------
        ValueError
            If the argument is nan or infinite.
        """
        if not cmath.isfinite(value):
            raise ValueError(f"Non-finite argument: {value}")
        return value
