# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Power series of the Mittag-Leffler function.

E_beta(z) = sum_j z^j / Gamma(beta j + 1)

Terms are assembled in log space (``j log z - log Gamma(beta j + 1)``)
so neither the power nor the Gamma function overflows. Summation is exact
(``math.fsum`` on the real and imaginary parts) once the truncation point
is known.

The largest term of the series is of order exp(|z|^(1/beta)), so the
cancellation loss on the negative half plane grows like that quantity.
In double precision the series is only used while |z|^(1/beta) stays
below the series radius; past that the same series is summed with mpmath
at a working precision raised by the expected loss.
"""

import cmath
import logging
import math
from typing import Optional

import mpmath
import numpy as np
from scipy.special import gammaln

from ..errors import DomainError, NonConvergenceError
from .request import DEFAULT_MAX_TERMS, DEFAULT_SERIES_RADIUS, MlRequest

LOG = logging.getLogger(__name__)

_CHUNK = 64
_GUARD_DIGITS = 20


def ml_series(
    req: MlRequest,
    max_terms: Optional[int] = None,
    radius: float = DEFAULT_SERIES_RADIUS,
) -> complex:
    """Evaluate E_beta(z) by its power series.

    The series is truncated before the first term that is below
    ``tol * |partial sum|`` once the terms decrease.

    Parameters
    ----------
    req : MlRequest
        The order, argument and tolerance.
    max_terms : Optional[int], optional
        The term budget, by default :func:`series_term_budget`.
    radius : float, optional
        The largest accepted |z|, by default 5.0.

    Returns
    -------
    complex
        The value of E_beta(z).

    Raises
    ------
    ValueError
        If max_terms is not positive.
    DomainError
        If |z| exceeds the series radius.
    NonConvergenceError
        If the budget is exhausted before the stopping rule triggers.
    """
    if max_terms is not None and max_terms < 1:
        raise ValueError(f"max_terms must be positive, got {max_terms}")
    magnitude = abs(req.z)
    if magnitude > radius:
        raise DomainError(
            f"|z| = {magnitude:g} is outside the series radius {radius:g}"
        )
    if req.z == 0:
        return 1.0 + 0.0j
    scale = magnitude ** (1.0 / req.beta)
    if max_terms is None:
        max_terms = series_term_budget(req.beta, scale)
    if scale <= radius:
        return _sum_double(req.z, req.beta, req.tol, max_terms)
    dps = _GUARD_DIGITS + math.ceil(scale / math.log(10.0))
    LOG.debug("series at %d digits for beta=%g z=%s", dps, req.beta, req.z)
    return _sum_mp(req.z, req.beta, req.tol, max_terms, dps)


def _sum_double(
    z: complex, beta: float, tol: float, max_terms: int
) -> complex:
    log_z = cmath.log(z)
    kept: list[np.ndarray] = []
    running = 0j
    previous = math.inf
    for start in range(0, max_terms, _CHUNK):
        j = np.arange(start, min(start + _CHUNK, max_terms), dtype=float)
        terms = np.exp(j * log_z - gammaln(beta * j + 1.0))
        magnitudes = np.abs(terms)
        partial = running + np.concatenate(([0j], np.cumsum(terms)[:-1]))
        before = np.concatenate(([previous], magnitudes[:-1]))
        stop = (
            (j > 0)
            & (magnitudes < tol * np.abs(partial))
            & (magnitudes < before)
        )
        if stop.any():
            first = int(np.argmax(stop))
            kept.append(terms[:first])
            return _exact_sum(np.concatenate(kept))
        kept.append(terms)
        running = complex(partial[-1] + terms[-1])
        previous = float(magnitudes[-1])
    raise NonConvergenceError(
        f"series did not converge in {max_terms} terms "
        f"(beta={beta:g}, z={z})"
    )


def _sum_mp(
    z: complex, beta: float, tol: float, max_terms: int, dps: int
) -> complex:
    with mpmath.workdps(dps):
        arg = mpmath.mpc(z)
        order = mpmath.mpf(beta)
        total = mpmath.mpc(0)
        power = mpmath.mpc(1)
        previous = mpmath.inf
        for j in range(max_terms):
            term = power * mpmath.rgamma(order * j + 1)
            size = abs(term)
            if j > 0 and size < tol * abs(total) and size < previous:
                return complex(total)
            total += term
            previous = size
            power *= arg
    raise NonConvergenceError(
        f"series did not converge in {max_terms} terms "
        f"(beta={beta:g}, z={z}, {dps} digits)"
    )


def _exact_sum(terms: np.ndarray) -> complex:
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def series_term_budget(beta: float, scale: float) -> int:
    """Get the default term budget of the series.

    With R = |z|^(1/beta) the terms grow up to j ~ R / beta and have
    fallen below any double precision tolerance by j ~ e R / beta.

    Parameters
    ----------
    beta : float
        The order, in (0, 1].
    scale : float
        R = |z|^(1/beta).

    Returns
    -------
    int
        Twice the decay point plus a margin, at least 20000.
    """
    return max(DEFAULT_MAX_TERMS, math.ceil(2.0 * math.e * scale / beta) + 1000)
