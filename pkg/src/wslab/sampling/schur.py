"""Exact single-channel (beta = 2) sampler via Verblunsky coefficients.

For N = 1 the reflection amplitude depends on the Haar matrix only through
the spectral measure of (U, e_1), whose Verblunsky coefficients are
independent with |alpha_k|^2 ~ Beta(1, M-1-k) and a final uniform phase
(Killip-Nenciu).  The Schur continued fraction evaluates the Caratheodory
function F at the coupling point a = sqrt(1-T), giving

    G = conj((F(a) - 1)/(2a)),   r = -G / (1 + a G),

identical in distribution to the dense pipeline at the same (N_phi, T) but
at O(N_phi) cost per sample.  Per-sample draw order: M-1 uniform moduli,
then M uniform phase variables.
"""

from __future__ import annotations

import numpy as np

from ..rng import sample_stream
from .dyson import CavityModel


def reflection_amplitudes_schur(
    model: CavityModel,
    sample_ids: np.ndarray,
    seed: int,
) -> np.ndarray:
    """|r|^2 for a batch of sample ids (vectorized over the batch)."""
    if model.beta != 2 or model.n_open != 1:
        raise ValueError("the Schur sampler is exact only for beta=2, N=1")
    m = model.total_channels
    a = np.sqrt(1.0 - model.tunnel_probability)
    B = len(sample_ids)
    mod = np.empty((B, m - 1))
    ph = np.empty((B, m))
    for j, sid in enumerate(sample_ids):
        rng = sample_stream(seed, int(sid))
        mod[j] = rng.random(m - 1)
        ph[j] = rng.random(m)
    k = np.arange(m - 1, dtype=float)
    alpha = np.sqrt(1.0 - mod ** (1.0 / (m - 1 - k))) * np.exp(2j * np.pi * ph[:, :-1])
    f = np.exp(2j * np.pi * ph[:, -1])
    for j in range(m - 2, -1, -1):
        zf = a * f
        f = (alpha[:, j] + zf) / (1.0 + np.conj(alpha[:, j]) * zf)
    F = (1.0 + a * f) / (1.0 - a * f)
    G = np.conj((F - 1.0) / (2.0 * a))
    r = -G / (1.0 + a * G)
    return np.abs(r) ** 2
