# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Printed amplitude formulas, an independent check of :func:`evolve`.

The eigenvector components enter as fixed magnitudes

    a' = b' = m = k = sqrt(2) / 2,    c = d = f = h = 1 / 2

with the sign convention of the two-qubit |gg, n+1 n+1> amplitude
(g1 + g2) c h b - m k b. g1 and g2 are the factors of the eigenvalues
+L and -L (L = lambda sqrt(n + 1) for one qubit, 2 lambda sqrt(n + 1) for
two), built directly from the Mittag-Leffler function or the
exponential:

    NaberI    g1 = E_beta(+(-i t)^beta L),  g2 = E_beta(-(-i t)^beta L)
    NaberII   g1 = E_beta(-i t^beta L),     g2 = E_beta(+i t^beta L)
    XGF       g1 = exp(+(-i t)^beta L / beta), g2 = exp(-(-i t)^beta L / beta)
    NewTFSE   g1 = exp(-i t^beta L / beta), g2 = exp(+i t^beta L / beta)
"""

import cmath
import math
from typing import Optional, Tuple

import numpy as np

from ..mlf import DEFAULT_TOL, ml
from ..model import CompositeBasis, InitialState, ModelParams, TaggedStateVector
from .teo import minus_i_power
from .variant import TfseVariant

EDGE = math.sqrt(2.0) / 2.0
"""a' = b' = m = k."""

CORNER = 0.5
"""c = d = f = h."""


def closed_form_amplitudes(
    variant: TfseVariant,
    params: ModelParams,
    init: Optional[InitialState],
    beta: float,
    t: float,
    tol: float = DEFAULT_TOL,
) -> TaggedStateVector:
    """Evaluate the printed solution of a variant.

    Parameters
    ----------
    variant : TfseVariant
        The evolution law.
    params : ModelParams
        The model parameters.
    init : Optional[InitialState]
        The two-qubit amplitudes (ignored for one qubit).
    beta : float
        The fractional order, in (0, 1].
    t : float
        The time, non negative.
    tol : float, optional
        Accuracy target of the Mittag-Leffler evaluations.

    Returns
    -------
    TaggedStateVector
        The state over ``CompositeBasis.for_model(params)``.

    Raises
    ------
    ValueError
        If beta or t is out of range, or two qubits lack amplitudes.
    """
    if not 0.0 < beta <= 1.0:
        raise ValueError(f"beta must be in (0, 1], got {beta}")
    if not t >= 0.0:
        raise ValueError(f"t must be non negative, got {t}")
    basis = CompositeBasis.for_model(params)
    strength = params.rabi_frequency * (1 if params.qubits == 1 else 2)
    g1, g2 = _factor_pair(variant, beta, strength, t, tol)
    if params.qubits == 1:
        amplitudes = [EDGE * EDGE * (g1 - g2), EDGE * EDGE * (g1 + g2)]
        return TaggedStateVector.from_basis(basis, amplitudes)
    if init is None:
        raise ValueError("Two qubits need initial amplitudes (a, b)")
    a, b = init.a, init.b
    amplitudes = [
        (g1 + g2) * CORNER * CORNER * b - EDGE * EDGE * b,
        (g1 - g2) * CORNER * CORNER * b,
        (g1 - g2) * CORNER * CORNER * b,
        (g1 + g2) * CORNER * CORNER * b + EDGE * EDGE * b,
        a,
    ]
    return TaggedStateVector.from_basis(basis, np.asarray(amplitudes))


def _factor_pair(
    variant: TfseVariant, beta: float, strength: float, t: float, tol: float
) -> Tuple[complex, complex]:
    if t == 0.0 or strength == 0.0:
        return 1.0 + 0.0j, 1.0 + 0.0j
    t_beta = t**beta
    if variant is TfseVariant.NABER_I:
        w = minus_i_power(beta) * t_beta * strength
        return ml(beta, w, tol), ml(beta, -w, tol)
    if variant is TfseVariant.NABER_II:
        w = 1j * t_beta * strength
        return ml(beta, -w, tol), ml(beta, w, tol)
    if variant is TfseVariant.XGF:
        w = minus_i_power(beta) * t_beta * strength / beta
        return cmath.exp(w), cmath.exp(-w)
    w = 1j * t_beta * strength / beta
    return cmath.exp(-w), cmath.exp(w)
