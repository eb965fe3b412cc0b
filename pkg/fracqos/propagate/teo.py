# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Scalar time-evolution factors of the four evolution laws."""

import cmath
import math

from ..errors import DomainError
from ..mlf import DEFAULT_TOL, ml
from .variant import TfseVariant


def minus_i_power(beta: float) -> complex:
    """Get (-i)^beta on the principal branch, exp(-i pi beta / 2).

    Parameters
    ----------
    beta : float
        The exponent.

    Returns
    -------
    complex
        The power, exactly -1j for beta = 1.
    """
    if beta == 1.0:
        return -1j
    return cmath.exp(-0.5j * math.pi * beta)


def teo_scalar(
    variant: TfseVariant,
    beta: float,
    alpha: float,
    t: float,
    tol: float = DEFAULT_TOL,
) -> complex:
    """Evolution factor f(alpha, t) of one eigenvalue.

    ==========  ===============================
    NaberI      E_beta(alpha (-i t)^beta)
    NaberII     E_beta(-i t^beta alpha)
    XGF         exp((-i)^beta t^beta alpha / beta)
    NewTFSE     exp(-i t^beta alpha / beta)
    ==========  ===============================

    with (-i t)^beta = t^beta exp(-i pi beta / 2) for t >= 0.

    Parameters
    ----------
    variant : TfseVariant
        The evolution law.
    beta : float
        The fractional order, in (0, 1].
    alpha : float
        The eigenvalue.
    t : float
        The (dimensionless) time, non negative.
    tol : float, optional
        Accuracy target of the Mittag-Leffler evaluations, by default 1e-12.

    Returns
    -------
    complex
        The factor; exactly 1 at t = 0 or alpha = 0.

    Raises
    ------
    ValueError
        If t is negative or beta is outside (0, 1].
    DomainError
        If an exponential factor overflows.
    """
    if not 0.0 < beta <= 1.0:
        raise ValueError(f"beta must be in (0, 1], got {beta}")
    if not t >= 0.0:
        raise ValueError(f"t must be non negative, got {t}")
    if t == 0.0 or alpha == 0.0:
        return 1.0 + 0.0j
    t_beta = t**beta
    if variant is TfseVariant.NABER_I:
        return ml(beta, alpha * t_beta * minus_i_power(beta), tol)
    if variant is TfseVariant.NABER_II:
        return ml(beta, -1j * t_beta * alpha, tol)
    if variant is TfseVariant.XGF:
        exponent = minus_i_power(beta) * t_beta * alpha / beta
    else:
        exponent = -1j * t_beta * alpha / beta
    try:
        return cmath.exp(exponent)
    except OverflowError as error:
        raise DomainError(
            f"{variant.info.display_name} factor exp({exponent}) overflows"
        ) from error
