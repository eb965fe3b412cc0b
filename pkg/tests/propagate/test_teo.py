# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Test fracqos.propagate.teo.*."""

import cmath
import math

import pytest

from fracqos.errors import DomainError
from fracqos.mlf import ml
from fracqos.propagate import TfseVariant, minus_i_power, teo_scalar


def test_minus_i_power() -> None:
    """Test (-i)^beta."""
    assert minus_i_power(1.0) == -1j
    assert minus_i_power(0.5) == pytest.approx(cmath.exp(-0.25j * math.pi))


@pytest.mark.parametrize("variant", list(TfseVariant))
def test_identity_at_zero(variant: TfseVariant) -> None:
    """Test f = 1 at t = 0 and for a zero eigenvalue.

    Parameters
    ----------
    variant : TfseVariant
        The evolution law.
    """
    assert teo_scalar(variant, 0.4, 2.0, 0.0) == 1.0
    assert teo_scalar(variant, 0.4, 0.0, 3.0) == 1.0


@pytest.mark.parametrize("variant", list(TfseVariant))
def test_schroedinger_limit(variant: TfseVariant) -> None:
    """Test f = exp(-i alpha t) at beta = 1.

    Parameters
    ----------
    variant : TfseVariant
        The evolution law.
    """
    for alpha, t in ((1.5, 0.7), (-2.0, 3.0), (0.3, 12.0)):
        value = teo_scalar(variant, 1.0, alpha, t)
        assert abs(value - cmath.exp(-1j * alpha * t)) <= 1e-10


def test_factor_forms() -> None:
    """Test each law against its operator form."""
    beta, alpha, t = 0.6, 1.3, 2.5
    t_beta = t**beta
    phase = cmath.exp(-0.5j * math.pi * beta)
    assert teo_scalar(TfseVariant.NABER_I, beta, alpha, t) == pytest.approx(
        ml(beta, alpha * t_beta * phase), rel=1e-14
    )
    assert teo_scalar(TfseVariant.NABER_II, beta, alpha, t) == pytest.approx(
        ml(beta, -1j * t_beta * alpha), rel=1e-14
    )
    assert teo_scalar(TfseVariant.XGF, beta, alpha, t) == pytest.approx(
        cmath.exp(phase * t_beta * alpha / beta), rel=1e-14
    )
    new = teo_scalar(TfseVariant.NEW, beta, alpha, t)
    assert abs(new) == pytest.approx(1.0, abs=1e-15)
    assert new == pytest.approx(cmath.exp(-1j * t_beta * alpha / beta))


def test_invalid() -> None:
    """Test out-of-range order and time."""
    with pytest.raises(ValueError):
        teo_scalar(TfseVariant.NEW, 0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        teo_scalar(TfseVariant.NEW, 0.5, 1.0, -1.0)


def test_overflow() -> None:
    """Test an XGF factor beyond double precision."""
    with pytest.raises(DomainError):
        teo_scalar(TfseVariant.XGF, 0.1, 50.0, 1e6)
