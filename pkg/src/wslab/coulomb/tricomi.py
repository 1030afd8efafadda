"""Finite-interval airfoil (principal-value) equation inverter."""

from __future__ import annotations

from typing import Callable

import numpy as np

from ..chebyshev import gc2_x, tricomi_bracket, u_series
from ..errors import InfeasibleSupportError, UnsupportedFieldError
from .density import DiscretizedDensity, from_cheb


def tricomi_invert(
    g: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    mass: float,
    n: int = 256,
    negative_tol: float = 1e-9,
) -> DiscretizedDensity:
    """Solve PV int f(x')/(x-x') dx' = g(x) on [a, b] with int f = mass.

    Returns the generic bounded-mass solution

        f(x) = [mass + (1/pi) PV int sqrt((t-a)(b-t)) g(t)/(t-x) dt]
               / (pi sqrt((x-a)(b-x))),

    evaluated through the Chebyshev-series Hilbert transform.  Endpoints are
    inverse-square-root by default; a vanishing bracket marks a soft edge.

    Raises UnsupportedFieldError when g looks singular inside (a, b) (its
    Chebyshev-U coefficients do not decay), and InfeasibleSupportError when
    the solution dips below -negative_tol (the caller must move the edges).
    """
    if not b > a:
        raise ValueError("need a < b")
    x = gc2_x(a, b, n)
    gv = np.asarray(g(x), dtype=float)
    if not np.all(np.isfinite(gv)):
        raise UnsupportedFieldError("field g is not finite on the interior nodes")
    coeffs = u_series(gv)
    scale = np.max(np.abs(coeffs)) + 1e-300
    tail = np.max(np.abs(coeffs[-max(4, n // 20):]))
    if tail > 0.5 * scale:
        raise UnsupportedFieldError(
            "Chebyshev-U coefficients of g do not decay; "
            "g appears singular inside (a, b)"
        )
    gas = tricomi_bracket(a, b, gv, mass)
    xq, Bq = gas.quad_nodes(max(n, 64))
    if Bq.min() < -negative_tol * max(abs(mass), scale * (b - a)):
        j = int(np.argmin(Bq))
        raise InfeasibleSupportError(
            "inverted density is negative inside the support; move the edges",
            min_value=float(Bq[j] / (np.pi * gas.width)),
            at=float(xq[j]),
        )
    return from_cheb(gas, grid_size=n)
