"""Public discretized-density type backed by the Chebyshev bracket series."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..chebyshev import ChebDensity, gc1_nodes


# endpoint bracket values below this fraction of the bracket scale are
# classified as soft (+1/2) edges
_SOFT_EDGE_CUTOFF = 1e-7


@dataclass(frozen=True)
class DiscretizedDensity:
    """One-dimensional probability density on a compact support.

    grid/values hold the density on interior Gauss-Chebyshev nodes
    (increasing in x); edge_exponents classify each endpoint as
    wall-pressed (-1/2, density diverges) or free (+1/2, density vanishes).
    bracket stores the Chebyshev-T coefficients of the smooth bracket
    B(u) with rho(x) = B(u)/(pi sqrt((x-a)(b-x))); it is the exact
    spectral representation behind grid/values.
    """

    support: tuple[float, float]
    grid: np.ndarray
    values: np.ndarray
    edge_exponents: tuple[float, float]
    bracket: np.ndarray = field(repr=False, default=None)

    def mass(self) -> float:
        """Quadrature-integrated total mass (exactly b_0 for the GC rule)."""
        return float(self.bracket[0])

    def to_cheb(self) -> ChebDensity:
        return ChebDensity(self.support[0], self.support[1], self.bracket)

    def density_at(self, x: np.ndarray) -> np.ndarray:
        """Interpolated density values strictly inside the support."""
        a, b = self.support
        u = np.clip((2.0 * np.asarray(x, dtype=float) - a - b) / (b - a), -1.0, 1.0)
        return self.to_cheb().values_at_u(u)


def from_cheb(gas: ChebDensity, grid_size: int = 256) -> DiscretizedDensity:
    u = gc1_nodes(grid_size)[::-1]
    vals = gas.values_at_u(u)
    bm, bp = gas.edge_brackets()
    scale = max(np.max(np.abs(gas.b)), 1e-300)
    exps = (
        0.5 if abs(bm) < _SOFT_EDGE_CUTOFF * scale else -0.5,
        0.5 if abs(bp) < _SOFT_EDGE_CUTOFF * scale else -0.5,
    )
    return DiscretizedDensity(
        support=(gas.lo, gas.hi),
        grid=gas.mid + gas.width * u,
        values=vals,
        edge_exponents=exps,
        bracket=gas.b.copy(),
    )
