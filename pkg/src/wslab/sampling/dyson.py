"""Domain types: symmetry class, cavity model, sampled spectra."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidModelError


VALID_BETAS = (1, 2, 4)


@dataclass(frozen=True)
class DysonClass:
    """Symmetry label: 1 orthogonal, 2 unitary, 4 symplectic."""

    beta: int

    def __post_init__(self):
        if self.beta not in VALID_BETAS:
            raise InvalidModelError(f"beta must be one of {VALID_BETAS}, got {self.beta}")

    def requires_even_channels(self) -> bool:
        """Analytic densities for beta=1 exist only for even channel counts."""
        return self.beta == 1


def default_n_fict(n_open: int, gamma: float) -> int:
    """Fictitious-channel count keeping the tunnel probability at or below 0.1."""
    return max(50 * n_open, math.ceil(10.0 * gamma * n_open))


@dataclass(frozen=True)
class CavityModel:
    """Absorbing cavity: N perfect channels plus N_phi weakly coupled ones."""

    n_open: int
    gamma: float
    beta: int = 2
    n_fict: int | None = None

    def __post_init__(self):
        DysonClass(self.beta)
        if self.n_open < 1:
            raise InvalidModelError("n_open must be >= 1")
        if self.gamma < 0:
            raise InvalidModelError("gamma must be >= 0")
        if self.n_fict is None:
            object.__setattr__(self, "n_fict", default_n_fict(self.n_open, self.gamma))
        if self.n_fict <= self.n_open:
            raise InvalidModelError("n_fict must exceed n_open")
        if not 0.0 <= self.tunnel_probability < 1.0:
            raise InvalidModelError(
                f"tunnel probability T = {self.tunnel_probability:.4f} outside [0, 1); "
                "increase n_fict"
            )

    @property
    def tunnel_probability(self) -> float:
        """T = gamma N / N_phi; the absorbing limit is N_phi -> inf at fixed T N_phi."""
        return self.gamma * self.n_open / self.n_fict

    @property
    def total_channels(self) -> int:
        return self.n_open + self.n_fict


@dataclass(frozen=True)
class GammaSpectrum:
    """Sorted rescaled inverse delays Gamma_n >= gamma and the rescaled time s."""

    gamma: float
    values: np.ndarray
    s: float
    saturated_count: int = 0

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if np.any(v < self.gamma - 1e-9):
            raise InvalidModelError("Gamma values below the absorption wall")
        if not np.all(np.diff(v) >= 0):
            raise InvalidModelError("Gamma values must be sorted ascending")
        if self.gamma > 0 and self.s > 1.0 / self.gamma + 1e-9:
            raise InvalidModelError("s exceeds its hard bound 1/gamma")
        object.__setattr__(self, "values", v)

    @property
    def n_open(self) -> int:
        return len(self.values)


def spectrum_from_reflection_eigenvalues(
    r_eigs: np.ndarray,
    gamma: float,
    eps_clamp: float = 1e-12,
) -> GammaSpectrum:
    """Map eigenvalues R of r^dag r to Gamma = gamma/(1-R); clamp saturation."""
    R = np.asarray(r_eigs, dtype=float)
    saturated = int(np.count_nonzero(R > 1.0 - eps_clamp))
    R = np.clip(R, 0.0, 1.0 - eps_clamp)
    values = np.sort(gamma / (1.0 - R))
    s = float(np.mean(1.0 / values))
    return GammaSpectrum(gamma=gamma, values=values, s=s, saturated_count=saturated)
