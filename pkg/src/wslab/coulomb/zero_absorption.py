"""Single-gas equilibrium at zero absorption (reference for the weak limit).

The gamma -> 0 gas sees the effective field g(x) = (1 - 1/x - nu/x^2)/2 on a
floating support [a, b] in (0, inf) with two soft edges.  Its resolvent is
algebraic: with u = sqrt(ab) and m = (a+b)/2,

    u^4 - u^3 - 3 nu u - nu^2 = 0,   m = 3 + nu/u,

which pins the edges in closed form and gives

    Phi_0'(nu) = -(1/2) [1 - m/u + (m - 3)(u^2 - m^2)/(2 u^3)].

The numerical route below solves the same problem with the Tricomi machinery
and is cross-checked against the algebraic edges in the tests.
"""

from __future__ import annotations

import numpy as np

from ..chebyshev import ChebDensity, gc2_x, tricomi_bracket
from ..errors import SolverDivergedError
from .density import DiscretizedDensity, from_cheb


def _field(nu: float):
    def g(x):
        return 0.5 * (1.0 - 1.0 / x - nu / (x * x))
    return g


def exact_edges(nu: float) -> tuple[float, float]:
    """Support edges from the quartic resolvent condition."""
    roots = np.roots([1.0, -1.0, 0.0, -3.0 * nu, -nu * nu])
    real = roots[np.abs(roots.imag) < 1e-10].real
    u = real[np.argmin(np.abs(real - 1.0))]
    m = 3.0 + nu / u
    half = np.sqrt(m * m - u * u)
    return float(m - half), float(m + half)


def exact_phi_derivative(nu: float) -> float:
    roots = np.roots([1.0, -1.0, 0.0, -3.0 * nu, -nu * nu])
    real = roots[np.abs(roots.imag) < 1e-10].real
    u = float(real[np.argmin(np.abs(real - 1.0))])
    m = 3.0 + nu / u
    return -0.5 * (1.0 - m / u + (m - 3.0) * (u * u - m * m) / (2.0 * u**3))


def solve_zero_absorption(nu: float = 0.0, grid_size: int = 256) -> DiscretizedDensity:
    """Newton on both soft edges, Tricomi inversion inside."""
    lo, hi = exact_edges(nu)  # algebraic edges are the natural starting point
    n = grid_size
    gfun = _field(nu)

    def brackets(a, b):
        gas = tricomi_bracket(a, b, gfun(gc2_x(a, b, n)), 1.0)
        return np.array(gas.edge_brackets())

    for _ in range(80):
        f0 = brackets(lo, hi)
        if np.max(np.abs(f0)) < 1e-13:
            break
        d = 1e-7
        ja = (brackets(lo + d, hi) - f0) / d
        jb = (brackets(lo, hi + d) - f0) / d
        step = np.linalg.solve(np.column_stack([ja, jb]), -f0)
        step = np.clip(step, -0.3, 0.3)
        lo += step[0]
        hi += step[1]
        if lo <= 1e-9:
            raise SolverDivergedError("left edge collapsed toward the origin")
    else:
        raise SolverDivergedError("edge Newton did not converge")
    gas = tricomi_bracket(lo, hi, gfun(gc2_x(lo, hi, n)), 1.0)
    return from_cheb(gas, grid_size=min(n, 1024))


def zero_absorption_phi_derivative(nu: float, grid_size: int = 256) -> float:
    """Phi_0'(nu) = int rho*(x; nu)/x dx via the numerical equilibrium."""
    dens = solve_zero_absorption(nu, grid_size)
    return dens.to_cheb().reciprocal_moment()
