# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Mittag-Leffler function on the whole complex plane."""

from .contour import ml_contour
from .request import DEFAULT_SERIES_RADIUS, DEFAULT_TOL, MlRequest
from .series import ml_series


def ml(beta: float, z: complex, tol: float = DEFAULT_TOL) -> complex:
    """Evaluate the one-parameter Mittag-Leffler function E_beta(z).

    The power series is used while both |z| and |z|^(1/beta) are within
    the series radius, the contour inversion elsewhere. E_beta has real
    Taylor coefficients, so the lower half plane is evaluated as the
    conjugate of the upper one and real arguments give real values.

    Parameters
    ----------
    beta : float
        The order, in (0, 1].
    z : complex
        The argument.
    tol : float, optional
        The relative accuracy target, by default 1e-12.

    Returns
    -------
    complex
        The value of E_beta(z).
    """
    req = MlRequest(beta=beta, z=z, tol=tol)
    arg = req.z
    if arg == 0:
        return 1.0 + 0.0j
    if arg.imag < 0:
        req = req.model_copy(update={"z": arg.conjugate()})
    if uses_series(req):
        value = ml_series(req)
    else:
        value = ml_contour(req)
    if arg.imag == 0:
        return complex(value.real, 0.0)
    if arg.imag < 0:
        return value.conjugate()
    return value


def uses_series(
    req: MlRequest, radius: float = DEFAULT_SERIES_RADIUS
) -> bool:
    """Check whether the dispatcher routes a request to the power series.

    Parameters
    ----------
    req : MlRequest
        The request.
    radius : float, optional
        The series radius, by default 5.0.

    Returns
    -------
    bool
        True for the series path, False for the contour path.
    """
    magnitude = abs(req.z)
    return magnitude <= radius and magnitude ** (1.0 / req.beta) <= radius
