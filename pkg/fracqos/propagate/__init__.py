# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Time evolution under the four time-fractional Schroedinger equations."""

from .closed_form import closed_form_amplitudes
from .evolve import EvolutionSpec, evolve, evolve_many
from .teo import minus_i_power, teo_scalar
from .variant import VARIANT_INFO, DerivativeKind, TfseVariant, VariantInfo

__all__ = [
    "VARIANT_INFO",
    "DerivativeKind",
    "EvolutionSpec",
    "TfseVariant",
    "VariantInfo",
    "closed_form_amplitudes",
    "evolve",
    "evolve_many",
    "minus_i_power",
    "teo_scalar",
]
