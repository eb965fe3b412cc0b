# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Test fracqos.mlf.series.*."""

import cmath
import math

import pytest

from fracqos.errors import DomainError, NonConvergenceError
from fracqos.mlf import (
    DEFAULT_MAX_TERMS,
    DEFAULT_SERIES_RADIUS,
    MlRequest,
    ml_series,
    series_term_budget,
)

from .oracle import read_oracle_table


def test_zero_argument() -> None:
    """Test E_beta(0) = 1."""
    assert ml_series(MlRequest(beta=0.3, z=0.0)) == 1.0


@pytest.mark.parametrize("z", [1.0, -2.5, 1.5j, -1 + 1j])
def test_exponential(z: complex) -> None:
    """Test E_1(z) = exp(z).

    Parameters
    ----------
    z : complex
        The argument.
    """
    value = ml_series(MlRequest(beta=1.0, z=z))
    assert abs(value - cmath.exp(z)) <= 1e-11 * abs(cmath.exp(z))


def test_half_order_erfc() -> None:
    """Test E_1/2(z) = exp(z^2) erfc(-z) on the real axis."""
    for z in (-1.5, -0.5, 0.5, 1.5):
        # Given
        expected = math.exp(z * z) * math.erfc(-z)
        # When
        value = ml_series(MlRequest(beta=0.5, z=z))
        # Then
        assert abs(value - expected) <= 1e-11 * abs(expected)


def test_elevated_precision_path() -> None:
    """Test an argument whose |z|^(1/beta) exceeds the double radius."""
    # Given: |z|^(1/beta) = 9 > 5
    expected = math.exp(9.0) * math.erfc(3.0)
    # When
    value = ml_series(MlRequest(beta=0.5, z=-3.0))
    # Then
    assert abs(value - expected) <= 1e-10 * abs(expected)


def test_matches_oracle_inside_radius() -> None:
    """Test the double precision path against the reference table."""
    rows = [
        point
        for point in read_oracle_table()
        if abs(point.z) ** (1.0 / point.beta) <= DEFAULT_SERIES_RADIUS
    ]
    assert len(rows) >= 50
    for point in rows:
        value = ml_series(MlRequest(beta=point.beta, z=point.z))
        assert abs(value - point.value) <= 1e-10 * abs(point.value)


def test_outside_radius() -> None:
    """Test that arguments beyond the radius are refused."""
    with pytest.raises(DomainError):
        ml_series(MlRequest(beta=0.5, z=6.0))
    with pytest.raises(DomainError):
        ml_series(MlRequest(beta=0.5, z=2.0), radius=1.0)


def test_term_budget() -> None:
    """Test the term budget."""
    with pytest.raises(NonConvergenceError):
        ml_series(MlRequest(beta=0.5, z=2.0), max_terms=3)
    with pytest.raises(ValueError):
        ml_series(MlRequest(beta=0.5, z=2.0), max_terms=0)


def test_term_budget_grows_with_the_argument() -> None:
    """Test that the default budget covers the peak of the terms."""
    # Given: beta = 0.2, z = -5, the largest term sits near j = 5^5 / 0.2
    peak = 5.0**5 / 0.2
    # When
    budget = series_term_budget(0.2, 5.0**5)
    # Then
    assert budget > math.e * peak > DEFAULT_MAX_TERMS
    assert series_term_budget(0.5, 4.0) == DEFAULT_MAX_TERMS


def test_small_order_at_the_radius_converges() -> None:
    """Test beta = 0.2 at the edge of the series radius on the real axis."""
    # Given the reference row of beta = 0.2 with the largest negative z
    row = min(
        (
            point
            for point in read_oracle_table()
            if point.beta == 0.2 and point.z.imag == 0
        ),
        key=lambda point: point.z.real,
    )
    assert row.z.real < -4.9
    # When the series is summed with its default budget
    value = ml_series(MlRequest(beta=0.2, z=row.z))
    # Then it converges past the peak term near j = 15000
    assert abs(value - row.value) <= 1e-10 * abs(row.value)


def test_explicit_budget_is_kept() -> None:
    """Test that an explicit budget overrides the default."""
    with pytest.raises(NonConvergenceError, match="in 40 terms"):
        ml_series(MlRequest(beta=0.3, z=-4.0), max_terms=40)
