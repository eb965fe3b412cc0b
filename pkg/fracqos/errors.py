# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Exceptions raised by fracqos.

Numerical failures derive from :class:`NumericalError` (the CLI maps them
to exit code 3). Input problems derive from ``ValueError`` (exit code 2),
like the ``pydantic.ValidationError`` raised for out-of-range values.
"""

from typing import List, Optional, Tuple

SweepKey = Tuple[str, int, float, float, int, float, float]
"""(variant, l, beta, lambda, n, c0, t) of a sweep point."""


class FracQosError(Exception):
    """Base class for all fracqos errors."""


class NumericalError(FracQosError, ArithmeticError):
    """A numerical evaluation could not produce a trustworthy value."""


class NonConvergenceError(NumericalError):
    """An iterative evaluation ran out of budget before converging."""


class DomainError(NumericalError):
    """The argument lies outside the region an evaluation path supports."""


class NumericalFailureError(NumericalError):
    """A computed factorisation failed its self-check."""


class DegenerateStateError(NumericalError):
    """The state has (numerically) zero total probability."""


class SweepPointError(NumericalError):
    """A numerical error raised while evaluating one sweep point.

    Attributes
    ----------
    key : SweepKey
        The (variant, l, beta, lambda, n, c0, t) of the failing point.
    """

    def __init__(self, key: SweepKey, cause: NumericalError) -> None:
        self.key = key
        variant, qubits, beta, coupling, photons, c0, t = key
        super().__init__(
            f"{type(cause).__name__} at variant={variant} l={qubits} "
            f"beta={beta:g} lambda={coupling:g} n={photons} c0={c0:g} "
            f"t={t:g}: {cause}"
        )


class BasisMismatchError(FracQosError, ValueError):
    """Basis labels of a tagged state vector are inconsistent."""


class ConfigParseError(FracQosError, ValueError):
    """A sweep configuration document could not be parsed.

    Attributes
    ----------
    line : Optional[int]
        The 1-based line number, if known.
    field : Optional[str]
        The offending key, if known.
    """

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        field: Optional[str] = None,
    ) -> None:
        self.line = line
        self.field = field
        where: List[str] = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"key '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class EmptySelectionError(FracQosError, ValueError):
    """A plot selection has nothing (or too little) to draw."""
