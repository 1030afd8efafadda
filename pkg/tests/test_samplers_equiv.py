"""Fast samplers vs the dense reference: exact algebra and distribution."""

import numpy as np
import pytest
from scipy.stats import ks_2samp

from wslab.rng import sample_stream
from wslab.sampling import CavityModel, haar_unitary, sample_spectrum_dense
from wslab.sampling.peel import _levels, reflection_spectra_peel
from wslab.sampling.schur import reflection_amplitudes_schur


def test_peel_one_step_identity_on_fixed_matrices():
    """The CS one-step reduction is an exact matrix identity."""
    rng = np.random.default_rng(7)
    N, n = 3, 8
    a = 0.93
    V1, W1 = haar_unitary(N, rng), haar_unitary(N, rng)
    V2, W2 = haar_unitary(n, rng), haar_unitary(n, rng)
    c = np.sort(rng.uniform(0.05, 0.95, N))
    S = np.sqrt(1 - c * c)
    m = N + n
    Sigma = np.zeros((m, m))
    Sigma[:N, :N] = np.diag(c)
    Sigma[:N, N:2 * N] = -np.diag(S)
    Sigma[N:2 * N, :N] = np.diag(S)
    Sigma[N:, N:] = np.eye(n)
    Sigma[N:2 * N, N:2 * N] = np.diag(c)
    L = np.zeros((m, m), dtype=complex)
    L[:N, :N], L[N:, N:] = V1, V2
    Rm = np.zeros((m, m), dtype=complex)
    Rm[:N, :N], Rm[N:, N:] = W1, W2
    U = L @ Sigma @ Rm.conj().T

    H_direct = np.linalg.inv(np.eye(m) - a * U)[:N, :N]
    Q = W2.conj().T @ V2
    Hn = np.linalg.inv(np.eye(n) - a * Q)[:N, :N]
    Mn = (np.eye(N) - np.linalg.inv(Hn)) / a
    Rmat = np.linalg.solve(np.eye(N) - a * Mn * c[None, :], Mn)
    Chat = np.diag(c) - a * (S[:, None] * Rmat * S[None, :])
    H_rec = np.linalg.inv(np.eye(N) - a * V1 @ Chat @ W1.conj().T)
    assert np.max(np.abs(H_rec - H_direct)) < 1e-12

    # and the reflection block of the coupled system equals -(corner map)
    A = np.diag(np.r_[np.zeros(N), np.full(n, a)])
    B = np.sqrt(np.eye(m) - A @ A)
    Y = A - B @ U @ np.linalg.solve(np.eye(m) - A @ U, B)
    r_top = -(np.eye(N) - np.linalg.inv(H_direct)) / a
    assert np.max(np.abs(Y[:N, :N] - r_top)) < 1e-12


def test_levels_plan():
    assert _levels(2, 10) == (2, [4, 6, 8, 10])
    assert _levels(3, 11) == (5, [8, 11])
    assert _levels(1, 5) == (1, [2, 3, 4, 5])


def _dense_R(model, seed, n_samples):
    out = []
    for i in range(n_samples):
        sp = sample_spectrum_dense(model, sample_stream(seed, i))
        out.append(1.0 - model.gamma / sp.values)    # back to reflection eigs
    return np.array(out)


@pytest.mark.slow
def test_peel_matches_dense_distribution():
    model = CavityModel(n_open=2, gamma=1.2, beta=2, n_fict=12)
    nd = 3000
    Rd = _dense_R(model, 1234, nd)
    Rp = np.sort(reflection_spectra_peel(model, np.arange(nd), 777), axis=1)
    for j in range(model.n_open):
        assert ks_2samp(Rd[:, j], Rp[:, j]).pvalue > 1e-3
    assert abs(Rd.mean() - Rp.mean()) < 4 * Rd.std() / np.sqrt(nd * 2)


@pytest.mark.slow
def test_schur_matches_dense_distribution():
    model = CavityModel(n_open=1, gamma=1.0, beta=2, n_fict=20)
    nd = 4000
    Rd = _dense_R(model, 99, nd)[:, 0]
    Rs = reflection_amplitudes_schur(model, np.arange(nd), 1)
    assert ks_2samp(Rd, Rs).pvalue > 1e-3


def test_peel_deterministic_given_seed():
    model = CavityModel(n_open=3, gamma=0.7, beta=2, n_fict=9)
    a = reflection_spectra_peel(model, np.arange(8), 42)
    b = reflection_spectra_peel(model, np.arange(8), 42)
    assert np.array_equal(a, b)
    c = reflection_spectra_peel(model, np.array([5]), 42)
    assert np.array_equal(a[5], c[0])   # stream depends on (seed, id) only
