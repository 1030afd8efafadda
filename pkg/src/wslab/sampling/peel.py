"""Exact beta = 2 sampler by CS-decomposition peeling.

The reflection block of the coupled cavity depends on the Haar matrix U of
size M = N + N_phi only through H = P^T (1 - aU)^{-1} P (a = sqrt(1-T), P the
open-channel frame): r = a^{-1}(H^{-1} - 1).  Writing U in its CS
decomposition at the partition (N, M-N) and using that, for Haar U, the CS
angle cosines C are a Jacobi ensemble while the factors are independent
Haar blocks, the corner resolvent obeys the exact one-step reduction

    M_out = V1 (C - a S R S) W1^dag,   R = (1 - a M_in C)^{-1} M_in,

with S = sqrt(1 - C^2) and M_in the same object for an independent Haar
matrix that is N channels smaller.  Iterating from a dense base of size
M mod N + N gives r = -M_top at O(N_phi N^2) cost per sample instead of
O(M^3).  (V1, C, W1) are drawn jointly as the SVD of a Haar-corner sample
Z = G (G^dag G + W)^{-1/2}; the gauge ambiguity of the SVD drops out of
V1 (.) W1^dag because the middle factor is diagonal.

Per-sample draw order: base Ginibre (mb x mb, real then imaginary part),
then per level ascending: corner Ginibre G (N x N, re/im), Bartlett diagonal
gammas (N, shapes d..d-N+1, scale 2), Bartlett strictly-lower Ginibre
(N x N, re/im, upper part discarded).
"""

from __future__ import annotations

import numpy as np

from ..rng import sample_stream
from .dyson import CavityModel


def _levels(n_open: int, total: int) -> tuple[int, list[int]]:
    """Base dimension in [N, 2N) and the ascending list of peeled sizes."""
    sizes = []
    m = total
    while m >= 2 * n_open:
        sizes.append(m)
        m -= n_open
    return m, sizes[::-1]


def _draw_batch(model: CavityModel, sample_ids, seed: int):
    """All random inputs for a batch, each from its own counter stream."""
    N = model.n_open
    mb, levels = _levels(N, model.total_channels)
    B = len(sample_ids)
    base = np.empty((B, mb, mb), dtype=complex)
    corner = np.empty((B, len(levels), N, N), dtype=complex)
    gammas = np.empty((B, len(levels), N))
    lower = np.empty((B, len(levels), N, N), dtype=complex)
    for j, sid in enumerate(sample_ids):
        rng = sample_stream(seed, int(sid))
        base[j] = rng.standard_normal((mb, mb)) + 1j * rng.standard_normal((mb, mb))
        for lv, m in enumerate(levels):
            d = m - N
            corner[j, lv] = (rng.standard_normal((N, N))
                             + 1j * rng.standard_normal((N, N)))
            shapes = d - np.arange(N, dtype=float)
            gammas[j, lv] = rng.gamma(shape=shapes, scale=2.0)
            lower[j, lv] = (rng.standard_normal((N, N))
                            + 1j * rng.standard_normal((N, N)))
    return mb, levels, base, corner, gammas, lower


def reflection_spectra_peel(
    model: CavityModel,
    sample_ids: np.ndarray,
    seed: int,
) -> np.ndarray:
    """Eigenvalues of r^dag r, shape (len(sample_ids), N)."""
    if model.beta != 2:
        raise ValueError("the peeling sampler is exact only for beta = 2")
    N = model.n_open
    a = np.sqrt(1.0 - model.tunnel_probability)
    mb, levels, base, corner, gammas, lower = _draw_batch(model, sample_ids, seed)
    B = base.shape[0]
    eye_b = np.eye(mb)
    eye_n = np.eye(N)

    # dense base: Haar via QR phase fix, then M = (1 - H^{-1})/a
    q, r = np.linalg.qr(base)
    d = np.diagonal(r, axis1=1, axis2=2)
    u = q * (d / np.abs(d))[:, None, :]
    h_full = np.linalg.solve(eye_b[None] - a * u, np.broadcast_to(eye_b, u.shape))
    h = h_full[:, :N, :N]
    m_cur = (np.broadcast_to(eye_n, h.shape) - np.linalg.inv(h)) / a

    tril_mask = np.tril(np.ones((N, N)), -1)
    for lv, msize in enumerate(levels):
        # Jacobi angles + Haar frames from the corner of a Haar Stiefel frame:
        # Z = G (G^dag G + W2)^{-1/2}ic with W2 = L L^dag (Bartlett, dof m-N)
        g1 = corner[:, lv]
        L = lower[:, lv] * tril_mask
        diag = np.sqrt(gammas[:, lv])
        L = L + diag[:, :, None] * eye_n          # lower-triangular Cholesky factor
        A = np.conj(np.swapaxes(g1, 1, 2)) @ g1 + L @ np.conj(np.swapaxes(L, 1, 2))
        rch = np.linalg.cholesky(A)               # A = rch rch^dag
        z = np.swapaxes(np.linalg.solve(rch, np.conj(np.swapaxes(g1, 1, 2))), 1, 2).conj()
        v1, c, w1h = np.linalg.svd(z)
        c = np.clip(c, 0.0, 1.0)
        s = np.sqrt(1.0 - c * c)
        rmat = np.linalg.solve(eye_n[None] - a * (m_cur * c[:, None, :]), m_cur)
        chat = (-a) * (s[:, :, None] * rmat * s[:, None, :])
        chat[:, np.arange(N), np.arange(N)] += c
        m_cur = v1 @ chat @ w1h
    rr = np.conj(np.swapaxes(m_cur, 1, 2)) @ m_cur   # r = -M_top; spectra of r^dag r
    return np.linalg.eigvalsh(rr)
