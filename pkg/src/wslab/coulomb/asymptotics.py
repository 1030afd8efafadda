"""Generating-function derivatives, cumulants, and closed-form limits."""

from __future__ import annotations

import warnings

import numpy as np

from ..chebyshev import ChebDensity, gc1_nodes
from ..errors import InsufficientInputError, OutsideAsymptoticRegimeError
from .density import DiscretizedDensity, from_cheb
from .two_gas import SolverSettings, solve_two_gas


def phi_derivative(gamma: float, mu: float, settings: SolverSettings | None = None) -> float:
    """dPhi_gamma/dmu via the thermodynamic identity int rho_Gamma(x)/x dx."""
    return solve_two_gas(gamma, mu, settings).phi_prime()


def cumulants_from_phi(
    gamma: float,
    order: int = 3,
    step: float = 0.05,
    settings: SolverSettings | None = None,
) -> list[float]:
    """[Phi'(0), Phi''(0), Phi'''(0)][:order] by central differences on Phi'.

    Phi'' uses Richardson extrapolation over steps (step, step/2).  The k-th
    cumulant of s follows from the scaling rule
    <s^k>_c = (-1)^(k+1) (2/(beta N^2))^(k-1) Phi^(k)(0); see cumulants_of_s.
    """
    if not 1 <= order <= 3:
        raise ValueError("order must be 1, 2 or 3")
    p = {0.0: phi_derivative(gamma, 0.0, settings)}
    out = [p[0.0]]
    if order >= 2:
        for h in (step, step / 2, -step / 2, -step):
            p[h] = phi_derivative(gamma, h, settings)
        d_h = (p[step] - p[-step]) / (2 * step)
        d_h2 = (p[step / 2] - p[-step / 2]) / step
        out.append((4.0 * d_h2 - d_h) / 3.0)
    if order >= 3:
        out.append((p[step] - 2.0 * p[0.0] + p[-step]) / step**2)
    return out


def cumulants_of_s(
    gamma: float,
    beta: int,
    n_open: int,
    order: int = 3,
    step: float = 0.05,
    settings: SolverSettings | None = None,
) -> list[float]:
    """Cumulants of the rescaled Wigner time s at finite (beta, N) scaling."""
    phis = cumulants_from_phi(gamma, order, step, settings)
    scale = 2.0 / (beta * n_open**2)
    return [(-1.0) ** (k + 2) * scale**k * phis[k] for k in range(len(phis))]


def weak_absorption_cumulants(
    gamma: float,
    zero_absorption_cumulants: list[float],
    beta: int,
    n_open: int,
    orders: int | None = None,
) -> list[float]:
    """<s^n>_c = <s^n>_c^(0) - (gamma beta N^2 / 4) <s^(n+1)>_c^(0), n = 1..k.

    The input list holds the zero-absorption cumulants through order k+1;
    the relation is the leading weak-absorption correction, O(gamma^2) exact.
    """
    z = list(zero_absorption_cumulants)
    k = orders if orders is not None else max(len(z) - 1, 1)
    if len(z) < k + 1:
        raise InsufficientInputError(
            f"need zero-absorption cumulants through order {k + 1}, got {len(z)}"
        )
    pref = gamma * beta * n_open**2 / 4.0
    return [z[n] - pref * z[n + 1] for n in range(k)]


def strong_absorption_density(gamma: float, mu_tilde: float = 0.0) -> DiscretizedDensity:
    """Leading strong-absorption profile of the shifted right gas.

    rho(y) = (1/2pi) sqrt((b-y)/y) (1 - (mu_tilde+1)/gamma) on y in [0, b],
    b = 4 + 4(1+mu_tilde)/gamma, where y = x - gamma.  The support stored on
    the returned density is the shifted one, [gamma, gamma+b].
    """
    if gamma <= 1.0:
        raise OutsideAsymptoticRegimeError(
            "strong-absorption closed form requires gamma > 1"
        )
    if gamma < 5.0:
        warnings.warn(
            f"strong-absorption formula used at gamma = {gamma} < 5; "
            "O(1/gamma^2) corrections are not negligible",
            RuntimeWarning,
            stacklevel=2,
        )
    b = 4.0 + 4.0 * (1.0 + mu_tilde) / gamma
    amp = 1.0 - (mu_tilde + 1.0) / gamma
    # bracket of (1/2pi) sqrt((b-y)/y) * amp on [0, b]: B(u) = amp*(b/4)(1 - u)
    coeff = amp * b / 4.0
    gas = ChebDensity(gamma, gamma + b, np.array([coeff, -coeff]))
    return from_cheb(gas)


def strong_absorption_density_values(y: np.ndarray, gamma: float, mu_tilde: float = 0.0):
    """Closed-form values rho(y) on the unshifted variable y = x - gamma."""
    b = 4.0 + 4.0 * (1.0 + mu_tilde) / gamma
    amp = 1.0 - (mu_tilde + 1.0) / gamma
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    inside = (y > 0) & (y < b)
    out[inside] = amp / (2.0 * np.pi) * np.sqrt((b - y[inside]) / y[inside])
    return out
