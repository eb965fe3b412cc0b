# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Mittag-Leffler function by numerical Laplace inversion.

The Laplace transform of E_beta(-(-z) t^beta) at t = 1 gives

    E_beta(z) = 1 / (2 pi i) * integral_C e^s s^(beta - 1) / (s^beta - z) ds

on any contour C that starts and ends at -inf, encircles the branch cut
on the negative real axis and leaves the pole s* = z^(1/beta) to its left.
When a contour passes left of the pole its residue e^(s*) / beta is added.
On the principal sheet the pole exists iff |arg z| < beta pi.

Contour
-------
The parabola s(u) = mu (1 + i u)^2, u real, integrated with the
trapezoidal rule on u = k h, k = -M..M. A point s lies on the parabola
with parameter phi(s) = (Re s + |s|) / 2, so the pole is enclosed when
phi(s*) < mu, at distance v* = 1 - sqrt(phi(s*) / mu) from the real
u axis (negative when it is outside).

Node count
----------
With c = log(100 / tol), an analytic strip (-a, d) around the real axis
and the integrand growing like exp(mu (1 + a)^2) on its lower edge:

    h = min(2 pi d / (mu (1 - d)^2 + c), 2 pi a / (mu (1 + a)^2 + c))
    M = ceil(sqrt(1 + c / mu) / h)

d is 0.85 of the distance to the branch cut (or to an enclosed pole) and
a is the unconstrained optimum sqrt(1 + c / mu) capped at 0.85 of the
distance to a pole outside the contour. mu is scanned over a geometric
grid bounded by log(tol / eps) (so e^mu rounding stays below tol) and the
plan with the fewest nodes is used. The quadrature error is estimated by
halving h; cheaper plans that fail the estimate fall back to the next one.
"""

import cmath
import logging
import math
from typing import List, NamedTuple, Optional

import numpy as np

from ..errors import DomainError, NonConvergenceError
from .request import MlRequest

LOG = logging.getLogger(__name__)

_STRIP_FRACTION = 0.85
_MU_CANDIDATES = 32
_MU_MIN = 0.05
_MAX_NODES = 20_000
_MAX_ATTEMPTS = 4
_EXP_LIMIT = 709.0


class ContourPlan(NamedTuple):
    """Parameters of one parabolic contour quadrature."""

    mu: float
    step: float
    nodes: int
    with_residue: bool


def ml_contour(req: MlRequest) -> complex:
    """Evaluate E_beta(z) by Laplace inversion on a parabolic contour.

    Parameters
    ----------
    req : MlRequest
        The order, argument and tolerance. The argument must be non zero.

    Returns
    -------
    complex
        The value of E_beta(z).

    Raises
    ------
    ValueError
        If the argument is zero.
    DomainError
        If no admissible contour exists or the value overflows.
    NonConvergenceError
        If no contour meets the tolerance.
    """
    z = req.z
    if z == 0:
        raise ValueError("The contour path needs a non-zero argument")
    if req.beta == 1.0:
        # no branch cut: shift the contour left until only the residue is left
        return _checked_exp(z)
    pole = _pole(z, req.beta)
    plans = contour_plans(req.beta, z, req.tol)
    if not plans:
        raise DomainError(f"no admissible contour for beta={req.beta} z={z}")
    residue = 0j
    if pole is not None and any(plan.with_residue for plan in plans):
        residue = _checked_exp(pole) / req.beta
    best_error = math.inf
    for plan in plans[:_MAX_ATTEMPTS]:
        coarse, fine = _trapezoid_pair(req.beta, z, plan)
        value = fine + (residue if plan.with_residue else 0j)
        error = abs(fine - coarse)
        if error <= 10.0 * req.tol * max(1.0, abs(value)):
            LOG.debug(
                "contour mu=%.4g h=%.4g M=%d err=%.3g",
                plan.mu,
                plan.step,
                plan.nodes,
                error,
            )
            return value
        LOG.debug("contour mu=%.4g rejected, err=%.3g", plan.mu, error)
        best_error = min(best_error, error)
    raise NonConvergenceError(
        f"contour quadrature error {best_error:.3g} above tol {req.tol:g} "
        f"for beta={req.beta} z={z}"
    )


def contour_plans(beta: float, z: complex, tol: float) -> List[ContourPlan]:
    """Admissible parabolic contours, cheapest first.

    Parameters
    ----------
    beta : float
        The order, in (0, 1).
    z : complex
        The (non zero) argument.
    tol : float
        The accuracy target.

    Returns
    -------
    List[ContourPlan]
        The plans sorted by node count.
    """
    c = math.log(100.0 / tol)
    mu_max = max(1.0, math.log(tol / np.finfo(float).eps))
    pole = _pole(z, beta)
    pole_level = None if pole is None else (pole.real + abs(pole)) / 2.0
    plans: List[ContourPlan] = []
    for mu in np.geomspace(_MU_MIN, mu_max, _MU_CANDIDATES):
        plan = _plan(float(mu), c, pole_level)
        if plan is not None:
            plans.append(plan)
    plans.sort(key=lambda plan: (plan.nodes, plan.mu))
    return plans


def _plan(
    mu: float, c: float, pole_level: Optional[float]
) -> Optional[ContourPlan]:
    upper = 1.0
    lower = math.sqrt(1.0 + c / mu)
    outside = False
    if pole_level is not None:
        distance = 1.0 - math.sqrt(pole_level / mu)
        if abs(distance) < 1e-8:
            return None
        if distance > 0:
            upper = min(upper, distance)
        else:
            outside = True
            lower = min(lower, _STRIP_FRACTION * -distance)
    d = _STRIP_FRACTION * upper
    step = min(
        2.0 * math.pi * d / (mu * (1.0 - d) ** 2 + c),
        2.0 * math.pi * lower / (mu * (1.0 + lower) ** 2 + c),
    )
    nodes = math.ceil(math.sqrt(1.0 + c / mu) / step)
    if nodes > _MAX_NODES:
        return None
    return ContourPlan(mu=mu, step=step, nodes=nodes, with_residue=outside)


def _pole(z: complex, beta: float) -> Optional[complex]:
    angle = cmath.phase(z)
    if abs(angle) >= beta * math.pi:
        return None
    return abs(z) ** (1.0 / beta) * cmath.exp(1j * angle / beta)


def _trapezoid_pair(
    beta: float, z: complex, plan: ContourPlan
) -> tuple[complex, complex]:
    # fine grid h/2 holds the coarse grid h on its even nodes
    k = np.arange(-2 * plan.nodes, 2 * plan.nodes + 1)
    u = 0.5 * plan.step * k
    w = 1.0 + 1j * u
    s = plan.mu * w * w
    log_s = np.log(s)
    s_beta = np.exp(beta * log_s)
    values = np.exp(s) * (s_beta / s) / (s_beta - z) * (plan.mu * w / math.pi)
    fine = 0.5 * plan.step * complex(values.sum())
    coarse = plan.step * complex(values[::2].sum())
    return coarse, fine


def _checked_exp(value: complex) -> complex:
    if value.real > _EXP_LIMIT:
        raise DomainError(f"exp({value}) overflows double precision")
    return cmath.exp(value)
