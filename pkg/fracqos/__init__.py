# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Time-fractional Schroedinger dynamics of qubits in cavities."""

from ._version import __version__
from .mlf import ml
from .model import InitialState, ModelParams
from .observables import excited_probability, reduce, total_probability
from .propagate import (
    EvolutionSpec,
    TfseVariant,
    closed_form_amplitudes,
    evolve,
    evolve_many,
)
from .sweeps import (
    PRESETS,
    SweepConfig,
    SweepRunner,
    emit_svg,
    parse_config,
    run_sweep,
    write_csv,
)

__all__ = [
    "PRESETS",
    "EvolutionSpec",
    "InitialState",
    "ModelParams",
    "SweepConfig",
    "SweepRunner",
    "TfseVariant",
    "__version__",
    "closed_form_amplitudes",
    "emit_svg",
    "evolve",
    "evolve_many",
    "excited_probability",
    "ml",
    "parse_config",
    "reduce",
    "run_sweep",
    "total_probability",
    "write_csv",
]
