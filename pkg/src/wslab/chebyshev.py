"""Chebyshev-series machinery for densities with inverse-square-root edges.

A density on [lo, hi] is stored through its *bracket* polynomial B:

    rho(x) = B(u) / (pi sqrt((x - lo)(hi - x))),   u = (2x - lo - hi)/(hi - lo),
    B(u)   = sum_k b[k] T_k(u).

In this representation the classical airfoil identities make the finite
Hilbert transform exact on the coefficients:

* mass:                 integral rho dx = b[0]
* principal-value self field at interior x:
                        PV integral rho(x')/(x-x') dx' = -(1/w) sum_{k>=1} b[k] U_{k-1}(u)
* endpoint values:      B(+-1) = sum_k b[k] (+-1)^k; a vanishing endpoint value
                        turns the generic -1/2 edge into a +1/2 (soft) edge.

All transforms run through type-I DSTs / type-III DCTs so the cost is
O(n log n) in the series length.
"""

from __future__ import annotations

import numpy as np
from scipy.fft import dst, idct


def gc2_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Chebyshev nodes of the second kind: u_j = cos(j pi/(n+1)), j=1..n."""
    theta = np.arange(1, n + 1) * (np.pi / (n + 1))
    return np.cos(theta), theta


def gc1_nodes(m: int) -> np.ndarray:
    """Gauss-Chebyshev nodes of the first kind, decreasing in u."""
    return np.cos((2.0 * np.arange(1, m + 1) - 1.0) * np.pi / (2.0 * m))


def u_series(values: np.ndarray) -> np.ndarray:
    """Chebyshev-U coefficients of a function sampled at the n GC-2 nodes.

    c_k = (2/pi) int_{-1}^{1} f(u) U_k(u) sqrt(1-u^2) du, evaluated with the
    n-point Gauss-Chebyshev rule of the second kind (a type-I DST).
    """
    n = len(values)
    theta = np.arange(1, n + 1) * (np.pi / (n + 1))
    return dst(np.sin(theta) * values, type=1) / (n + 1)


def fold_t_gc1(coef: np.ndarray, m: int) -> np.ndarray:
    """Fold T-series coefficients onto the m-point GC-1 grid (exact aliasing)."""
    folded = np.zeros(m)
    k = np.arange(len(coef))
    q, r = np.divmod(k, 2 * m)
    sgn = np.where(q % 2 == 0, 1.0, -1.0)
    low = r < m
    np.add.at(folded, r[low], sgn[low] * coef[low])
    high = (~low) & (r > m)                      # cos(m theta_j) = 0 on this grid
    np.add.at(folded, 2 * m - r[high], -sgn[high] * coef[high])
    return folded


def t_values_gc1(coef: np.ndarray, m: int) -> np.ndarray:
    """Values of sum_k coef[k] T_k(u) at the m GC-1 nodes (decreasing u)."""
    f = fold_t_gc1(np.asarray(coef, dtype=float), m)
    y = np.empty(m)
    y[0] = 2.0 * m * f[0]
    y[1:] = m * f[1:]
    return idct(y, type=2, n=m)


def u_values_gc1(coef: np.ndarray, m: int) -> np.ndarray:
    """Values of sum_k coef[k] U_k(u) at the m GC-1 nodes (decreasing u)."""
    coef = np.asarray(coef, dtype=float)
    # sin((k+1) theta) folds with period 2m on theta_j = (2j-1) pi / (2m)
    s = np.zeros(m + 1)
    kk = np.arange(1, len(coef) + 1)             # harmonic index r0 = k+1
    q, r = np.divmod(kk, 2 * m)
    sgn = np.where(q % 2 == 0, 1.0, -1.0)
    low = (r >= 1) & (r <= m)
    np.add.at(s, r[low], sgn[low] * coef[low])
    high = r > m
    np.add.at(s, 2 * m - r[high], sgn[high] * coef[high])
    x = np.empty(m)
    x[: m - 1] = s[1:m] / 2.0
    x[m - 1] = s[m]
    vals = dst(x, type=3, n=m)
    theta = (2.0 * np.arange(1, m + 1) - 1.0) * np.pi / (2.0 * m)
    return vals / np.sin(theta)


def t_eval(coef: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Clenshaw evaluation of a T-series at arbitrary points (short series)."""
    b1 = np.zeros_like(u)
    b2 = np.zeros_like(u)
    for c in np.asarray(coef)[:0:-1]:
        b1, b2 = 2.0 * u * b1 - b2 + c, b1
    return u * b1 - b2 + coef[0]


class ChebDensity:
    """Bracket-series density on [lo, hi]; see module docstring."""

    __slots__ = ("lo", "hi", "b", "_nodes")

    def __init__(self, lo: float, hi: float, b: np.ndarray):
        if not hi > lo:
            raise ValueError("empty support")
        self.lo = float(lo)
        self.hi = float(hi)
        self.b = np.asarray(b, dtype=float)
        self._nodes: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    # --- geometry -----------------------------------------------------
    @property
    def width(self) -> float:
        return 0.5 * (self.hi - self.lo)

    @property
    def mid(self) -> float:
        return 0.5 * (self.hi + self.lo)

    @property
    def order(self) -> int:
        return len(self.b) - 1

    def mass(self) -> float:
        return float(self.b[0])

    def edge_brackets(self) -> tuple[float, float]:
        """(B(-1), B(+1)); a zero value marks a soft (vanishing) edge."""
        signs = (-1.0) ** np.arange(len(self.b))
        return float(np.dot(self.b, signs)), float(self.b.sum())

    # --- sampled values ------------------------------------------------
    def quad_nodes(self, m: int) -> tuple[np.ndarray, np.ndarray]:
        """m-point GC-1 rule: (x_j, B(u_j)); integral rho h dx ~ mean(B_j h(x_j))."""
        got = self._nodes.get(m)
        if got is None:
            u = gc1_nodes(m)
            got = (self.mid + self.width * u, t_values_gc1(self.b, m))
            self._nodes[m] = got
        return got

    def values_at_u(self, u: np.ndarray) -> np.ndarray:
        """Density values rho(x(u)) at interior points."""
        B = t_eval(self.b, u) if len(self.b) <= 2048 else self._t_eval_long(u)
        return B / (np.pi * np.sqrt(1.0 - u * u) * 2.0 * self.width) * 2.0

    def _t_eval_long(self, u: np.ndarray) -> np.ndarray:
        theta = np.arccos(np.clip(u, -1.0, 1.0))
        out = np.zeros_like(u)
        for start in range(0, len(self.b), 4096):
            k = np.arange(start, min(start + 4096, len(self.b)))
            out += np.cos(np.outer(theta, k)) @ self.b[k]
        return out

    # --- fields ---------------------------------------------------------
    def self_field_gc1(self, m: int) -> tuple[np.ndarray, np.ndarray]:
        """(x_j, PV field at the m interior GC-1 probe nodes)."""
        u = gc1_nodes(m)
        vals = u_values_gc1(self.b[1:], m) if len(self.b) > 1 else np.zeros(m)
        return self.mid + self.width * u, -vals / self.width

    def field(self, x: np.ndarray, head: int = 2048) -> np.ndarray:
        """int rho(x')/(x - x') dx' for x strictly outside the support.

        Far points: GC-1 quadrature with min(len(b), head) nodes; the rule
        integrates the bracket exactly (via coefficient folding) up to a
        O(b_head q^head) tail when the series is longer than `head`.  Near
        points (geometric factor q close to 1): exact Horner sum over the
        full series, sum_k b_k q^k * sgn/(w sqrt(z^2-1)).
        """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        z = (x - self.mid) / self.width
        d = np.abs(z) - 1.0
        if np.any(d <= 0):
            raise ValueError("field() requires exterior points")
        need = 16.0 / np.sqrt(2.0 * np.minimum(d, 1.0)) + 16.0
        out = np.empty_like(x)
        mhead = min(head, len(self.b))
        far = need <= mhead
        if far.any():
            xq, Bq = self.quad_nodes(mhead)
            idx = np.flatnonzero(far)
            for blk in range(0, len(idx), 512):
                sel = idx[blk:blk + 512]
                out[sel] = (Bq[None, :] / (x[sel, None] - xq[None, :])).mean(axis=1)
        near = ~far
        if near.any():
            zn = z[near]
            sg = np.sign(zn)
            rt = np.sqrt(zn * zn - 1.0)
            q = zn - sg * rt
            acc = np.zeros_like(zn)
            qp = np.ones_like(zn)
            for start in range(0, len(self.b), 512):
                blk = self.b[start:start + 512]
                h = np.zeros_like(zn)
                for c in blk[::-1]:
                    h = h * q + c
                acc += qp * h
                qp = qp * q ** len(blk)
                if np.max(np.abs(qp)) < 1e-17:
                    break
            out[near] = sg * acc / (self.width * rt)
        return out

    def reciprocal_moment(self) -> float:
        """int rho(x)/x dx for supports in (0, inf); exact geometric series."""
        if self.lo <= 0:
            raise ValueError("reciprocal moment needs support in (0, inf)")
        return float(-self.field(np.array([0.0]))[0])

    def potential_moment(self) -> float:
        """int x rho(x) dx = mid*b0 + w*b1/2."""
        b1 = self.b[1] if len(self.b) > 1 else 0.0
        return self.mid * self.b[0] + self.width * b1 / 2.0

    def log_self_energy(self) -> float:
        """double integral rho(x) rho(x') ln|x-x'| dx dx' (exact in the series)."""
        k = np.arange(1, len(self.b))
        tail = float(np.sum(self.b[1:] ** 2 / (2.0 * k))) if len(self.b) > 1 else 0.0
        return self.b[0] ** 2 * np.log(self.width / 2.0) - tail

    def scaled(self, factor: float) -> "ChebDensity":
        return ChebDensity(self.lo, self.hi, factor * self.b)


def tricomi_bracket(lo: float, hi: float, gvals: np.ndarray, mass: float) -> ChebDensity:
    """Invert PV int f(x')/(x-x') dx' = g on [lo, hi] with total mass `mass`.

    `gvals` are samples of g at the GC-2 nodes mapped to [lo, hi]; the output
    bracket is B = mass*T_0 - w * sum_k c_k T_{k+1} with c the U-series of g.
    """
    c = u_series(gvals)
    b = np.empty(len(c) + 1)
    b[0] = mass
    b[1:] = -0.5 * (hi - lo) * c
    return ChebDensity(lo, hi, b)


def gc2_x(lo: float, hi: float, n: int) -> np.ndarray:
    """GC-2 collocation nodes mapped to [lo, hi] (decreasing)."""
    u, _ = gc2_nodes(n)
    return 0.5 * (hi + lo) + 0.5 * (hi - lo) * u
