# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""The four time-fractional Schroedinger equations."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict

from typing_extensions import Literal

DerivativeKind = Literal["caputo", "conformable"]
"""Kind of fractional time derivative."""


@dataclass(frozen=True, slots=True)
class VariantInfo:
    """Descriptive features of an evolution law.

    Attributes
    ----------
    display_name : str
        Human readable name.
    derivative : DerivativeKind
        The fractional derivative the equation uses.
    continuation : str
        The analytic continuation of time (hbar_beta = 1).
    operator : str
        The time evolution operator acting on the Hamiltonian H.
    local_in_time : bool
        Whether the evolution is local in time.
    ordinal : int
        Position in the canonical ordering (CSV rows, legends).
    """

    display_name: str
    derivative: DerivativeKind
    continuation: str
    operator: str
    local_in_time: bool
    ordinal: int


class TfseVariant(str, Enum):
    """Evolution laws, valued by their command line tag."""

    NABER_I = "naber1"
    NABER_II = "naber2"
    XGF = "xgf"
    NEW = "new"

    @property
    def info(self) -> VariantInfo:
        """Get the descriptive features of the variant."""
        return VARIANT_INFO[self]

    @classmethod
    def parse(cls, value: str) -> "TfseVariant":
        """Get a variant from its tag or member name (case insensitive).

        Parameters
        ----------
        value : str
            The tag (e.g. ``naber1``) or name (e.g. ``NaberI``).

        Returns
        -------
        TfseVariant
            The variant.

        Raises
        ------
        ValueError
            If the value names no variant.
        """
        key = "".join(value.lower().split()).replace("_", "").replace("-", "")
        for variant in cls:
            aliases = {
                variant.value,
                variant.name.lower().replace("_", ""),
                variant.info.display_name.lower().replace(" ", ""),
            }
            if key in aliases:
                return variant
        valid = ", ".join(variant.value for variant in cls)
        raise ValueError(f"Unknown variant '{value}', expected one of {valid}")

    def __str__(self) -> str:
        """Get the command line tag."""
        return self.value


VARIANT_INFO: Dict[TfseVariant, VariantInfo] = {
    TfseVariant.NABER_I: VariantInfo(
        display_name="Naber I",
        derivative="caputo",
        continuation="t -> t / i",
        operator="E_beta[(-i t)^beta H]",
        local_in_time=False,
        ordinal=0,
    ),
    TfseVariant.NABER_II: VariantInfo(
        display_name="Naber II",
        derivative="caputo",
        continuation="t -> t / i^(1/beta)",
        operator="E_beta[-i t^beta H]",
        local_in_time=False,
        ordinal=1,
    ),
    TfseVariant.XGF: VariantInfo(
        display_name="XGF",
        derivative="conformable",
        continuation="t -> t / (i beta^(1/beta))",
        operator="exp[(-i)^beta t^beta H / beta]",
        local_in_time=True,
        ordinal=2,
    ),
    TfseVariant.NEW: VariantInfo(
        display_name="New TFSE",
        derivative="conformable",
        continuation="t -> t / (i beta)^(1/beta)",
        operator="exp[-i t^beta H / beta]",
        local_in_time=True,
        ordinal=3,
    ),
}
