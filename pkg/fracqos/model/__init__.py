# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Resonant qubit-cavity models: parameters, bases, Hamiltonians, states."""

from .basis import (
    SYSTEM_LEVELS,
    BasisElement,
    CompositeBasis,
    TaggedStateVector,
)
from .hamiltonian import build_hamiltonian
from .initial import initial_state
from .params import InitialState, ModelParams, QubitCount, ab_from_concurrence
from .spectral import RESIDUAL_LIMIT, SpectralDecomposition, spectral_decompose

__all__ = [
    "RESIDUAL_LIMIT",
    "SYSTEM_LEVELS",
    "BasisElement",
    "CompositeBasis",
    "InitialState",
    "ModelParams",
    "QubitCount",
    "SpectralDecomposition",
    "TaggedStateVector",
    "ab_from_concurrence",
    "build_hamiltonian",
    "initial_state",
    "spectral_decompose",
]
