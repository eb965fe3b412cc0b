# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Evolution of the total-system state through the spectral decomposition."""

from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from ..mlf import DEFAULT_TOL
from ..model import (
    InitialState,
    ModelParams,
    SpectralDecomposition,
    TaggedStateVector,
    build_hamiltonian,
    initial_state,
    spectral_decompose,
)
from .teo import teo_scalar
from .variant import TfseVariant

NORM_TOL = 1e-12
"""Allowed deviation of the initial squared norm from 1."""


@dataclass(frozen=True, slots=True)
class EvolutionSpec:
    """Everything evolve needs.

    The first ``spectrum.dim`` amplitudes of ``psi0`` form the excitation
    block; any further amplitudes are carried through unchanged.

    Attributes
    ----------
    variant : TfseVariant
        The evolution law.
    beta : float
        The fractional order, in (0, 1].
    spectrum : SpectralDecomposition
        The decomposition of the Hamiltonian on the excitation block.
    psi0 : TaggedStateVector
        The normalized initial state.
    tol : float
        Accuracy target of the Mittag-Leffler evaluations.
    """

    variant: TfseVariant
    beta: float
    spectrum: SpectralDecomposition
    psi0: TaggedStateVector
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        """Validate the specification.

        Raises
        ------
        ValueError
            If beta, the norm or the dimensions are invalid.
        """
        if not 0.0 < self.beta <= 1.0:
            raise ValueError(f"beta must be in (0, 1], got {self.beta}")
        if len(self.psi0) < self.spectrum.dim:
            raise ValueError(
                f"State of size {len(self.psi0)} is smaller than the "
                f"spectrum dimension {self.spectrum.dim}"
            )
        norm = self.psi0.norm_squared()
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"The initial state is not normalized ({norm!r})")

    @classmethod
    def build(
        cls,
        variant: TfseVariant,
        beta: float,
        params: ModelParams,
        init: Optional[InitialState] = None,
        tol: float = DEFAULT_TOL,
    ) -> "EvolutionSpec":
        """Build the specification of a model.

        Parameters
        ----------
        variant : TfseVariant
            The evolution law.
        beta : float
            The fractional order.
        params : ModelParams
            The model parameters.
        init : Optional[InitialState], optional
            The two-qubit amplitudes (required for two qubits).
        tol : float, optional
            Accuracy target, by default 1e-12.

        Returns
        -------
        EvolutionSpec
            The specification.
        """
        return cls(
            variant=variant,
            beta=beta,
            spectrum=spectral_decompose(build_hamiltonian(params)),
            psi0=initial_state(params, init),
            tol=tol,
        )


def evolve(spec: EvolutionSpec, t: float) -> TaggedStateVector:
    """Evolve the initial state to time t.

    psi(t) = sum_q f(alpha_q, t) <u_q|psi0> |u_q> on the excitation block;
    decoupled amplitudes are copied.

    Parameters
    ----------
    spec : EvolutionSpec
        The evolution specification.
    t : float
        The time, non negative.

    Returns
    -------
    TaggedStateVector
        The state at t (``spec.psi0`` itself at t = 0).

    Raises
    ------
    ValueError
        If t is negative.
    """
    if not t >= 0.0:
        raise ValueError(f"t must be non negative, got {t}")
    if t == 0.0:
        return spec.psi0
    dim = spec.spectrum.dim
    factors = [
        teo_scalar(spec.variant, spec.beta, float(alpha), t, spec.tol)
        for alpha in spec.spectrum.eigenvalues
    ]
    amplitudes = spec.psi0.amplitudes
    block = spec.spectrum.apply(factors, amplitudes[:dim])
    return TaggedStateVector(
        elements=spec.psi0.elements,
        amplitudes=np.concatenate((block, amplitudes[dim:])),
    )


def evolve_many(
    spec: EvolutionSpec, times: Iterable[float]
) -> List[TaggedStateVector]:
    """Evolve to each time of a sequence.

    Every point is computed on its own, so the result does not depend on
    the order of evaluation.

    Parameters
    ----------
    spec : EvolutionSpec
        The evolution specification.
    times : Iterable[float]
        The times.

    Returns
    -------
    List[TaggedStateVector]
        The states, one per time.
    """
    return [evolve(spec, float(t)) for t in times]
