"""Tunnel-coupling transform, block extraction, and the map to spectra."""

from __future__ import annotations

import numpy as np
import scipy.linalg as sla
from scipy.linalg import lapack

from ..errors import (
    AbsorptionRequiredError,
    IllConditionedCouplingError,
    InvalidPartitionError,
    NonContractionInputError,
)
from .dyson import CavityModel, GammaSpectrum, spectrum_from_reflection_eigenvalues

_COND_LIMIT = 1e12


def mean_matrix(model: CavityModel) -> np.ndarray:
    """Diagonal mean scattering matrix: 0 on open channels, sqrt(1-T) on
    fictitious ones (in the 2n complex embedding for beta = 4)."""
    a = np.sqrt(1.0 - model.tunnel_probability)
    diag = np.r_[np.zeros(model.n_open), np.full(model.n_fict, a)]
    if model.beta == 4:
        diag = np.r_[diag, diag]
    return np.diag(diag)


def apply_coupling(u: np.ndarray, mean_s: np.ndarray) -> np.ndarray:
    """Y = A - sqrt(1-A^2) U (1 - A U)^{-1} sqrt(1-A^2) for Hermitian A.

    Maps a perfectly coupled scattering matrix U to one with mean A.  The
    linear solve uses a pivoted LU with a 1-norm condition estimate; an
    estimate above 1e12 aborts the sample.
    """
    a_diag = np.diagonal(mean_s)
    if np.max(np.abs(mean_s - np.diag(a_diag))) > 0:
        raise NotImplementedError("only diagonal mean matrices are supported")
    if np.max(a_diag.real) >= 1.0 or np.min(a_diag.real) < 0.0:
        raise ValueError("mean-matrix eigenvalues must lie in [0, 1)")
    a = a_diag.real
    m = 1.0 * np.eye(u.shape[0]) - a[:, None] * u
    lu, piv = sla.lu_factor(m, check_finite=False)
    anorm = np.linalg.norm(m, 1)
    rcond = lapack.zgecon(lu, anorm)[0]
    if rcond <= 0 or 1.0 / rcond > _COND_LIMIT:
        raise IllConditionedCouplingError(np.inf if rcond <= 0 else 1.0 / rcond)
    root = np.sqrt(1.0 - a * a)
    inner = sla.lu_solve((lu, piv), root[:, None] * np.eye(u.shape[0]), check_finite=False)
    return np.diag(a) - root[:, None] * (u @ inner)


def extract_reflection(s: np.ndarray, n_open: int) -> np.ndarray:
    """Top-left open-channel block of a scattering matrix."""
    if n_open >= s.shape[0]:
        raise InvalidPartitionError("n_open must be smaller than the matrix dimension")
    return s[:n_open, :n_open].copy()


def extract_reflection_embedded(s: np.ndarray, n_open: int, n_total: int) -> np.ndarray:
    """Open-channel block in the beta=4 embedding (J-paired index set)."""
    if n_open >= n_total or s.shape[0] != 2 * n_total:
        raise InvalidPartitionError("inconsistent embedded partition")
    idx = np.r_[np.arange(n_open), n_total + np.arange(n_open)]
    return s[np.ix_(idx, idx)].copy()


def reflection_to_gamma(
    r: np.ndarray,
    gamma: float,
    beta: int = 2,
    eps_clamp: float = 1e-12,
) -> GammaSpectrum:
    """Spectrum Gamma_n = gamma / (1 - R_n) from the reflection block.

    R_n are Hermitian eigenvalues of r^dag r (clipped to [0, 1-eps_clamp];
    clamped values are counted as saturated).  For beta = 4 the embedded 2N
    eigenvalues come in Kramers pairs and are reduced to one per pair.
    """
    if gamma <= 0:
        raise AbsorptionRequiredError("the map Gamma = gamma/(1-R) needs gamma > 0")
    R = np.linalg.eigvalsh(r.conj().T @ r)
    if np.any(R > 1.0 + 1e-10):
        raise NonContractionInputError(f"largest R = {R.max():.3e} exceeds 1")
    if beta == 4:
        R = np.sort(R)
        pairs = R.reshape(-1, 2)
        gaps = np.abs(pairs[:, 1] - pairs[:, 0])
        if np.any(gaps > 1e-8 * (1.0 + np.abs(pairs).max())):
            raise NonContractionInputError(
                "Kramers pairing violated; input is not a self-dual embedding"
            )
        R = pairs.mean(axis=1)
    R = np.clip(R, 0.0, None)
    return spectrum_from_reflection_eigenvalues(R, gamma, eps_clamp)


def sample_spectrum_dense(model: CavityModel, rng: np.random.Generator) -> GammaSpectrum:
    """Reference pipeline: Haar draw, coupling, block extraction, spectrum."""
    from .haar import sample_haar

    u = sample_haar(model.total_channels, model.beta, rng)
    y = apply_coupling(u, mean_matrix(model))
    if model.beta == 4:
        r = extract_reflection_embedded(y, model.n_open, model.total_channels)
    else:
        r = extract_reflection(y, model.n_open)
    return reflection_to_gamma(r, model.gamma, beta=model.beta)
