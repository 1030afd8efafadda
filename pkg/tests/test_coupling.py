"""Coupling transform, block extraction, and the spectrum map."""

import numpy as np
import pytest

from wslab.errors import (
    AbsorptionRequiredError,
    InvalidPartitionError,
    NonContractionInputError,
)
from wslab.sampling import (
    CavityModel,
    apply_coupling,
    extract_reflection,
    extract_reflection_embedded,
    haar_unitary,
    mean_matrix,
    reflection_to_gamma,
    sample_haar,
    sample_spectrum_dense,
    symmetry_defect,
    unitarity_defect,
)


def test_perfect_coupling_collapses_to_minus_u():
    rng = np.random.default_rng(0)
    u = haar_unitary(5, rng)
    y = apply_coupling(u, np.zeros((5, 5)))
    assert np.allclose(y, -u, atol=1e-13)


def test_coupling_preserves_unitarity():
    rng = np.random.default_rng(1)
    u = haar_unitary(6, rng)
    y = apply_coupling(u, 0.5 * np.eye(6))
    assert unitarity_defect(y) < 1e-10


def test_coupling_preserves_symmetry_for_beta1():
    rng = np.random.default_rng(2)
    u = sample_haar(6, 1, rng)
    a = np.diag([0.0, 0.0, 0.7, 0.7, 0.3, 0.3])
    y = apply_coupling(u, a)
    assert symmetry_defect(y) < 1e-10
    assert unitarity_defect(y) < 1e-10


def test_coupling_mean_is_a():
    # <Y> = A over the Haar measure: check at modest sample size
    rng = np.random.default_rng(3)
    a = np.diag([0.0, 0.6, 0.6])
    acc = np.zeros((3, 3), dtype=complex)
    n = 3000
    for _ in range(n):
        acc += apply_coupling(haar_unitary(3, rng), a)
    assert np.max(np.abs(acc / n - a)) < 0.05


def test_t_equal_one_means_zero_mean_matrix():
    model = CavityModel(n_open=2, gamma=1.0, beta=2, n_fict=5)
    # T = gamma*N/nphi = 0.4; build the T=1 edge case by hand
    a = mean_matrix(model)
    assert np.allclose(np.diagonal(a)[:2], 0.0)
    assert np.allclose(np.diagonal(a)[2:], np.sqrt(1 - model.tunnel_probability))


def test_extract_reflection_blocks():
    s = np.diag(np.arange(1.0, 6.0))
    assert np.allclose(extract_reflection(s, 2), np.diag([1.0, 2.0]))
    with pytest.raises(InvalidPartitionError):
        extract_reflection(s, 5)
    b = np.arange(16.0).reshape(4, 4)
    r = extract_reflection_embedded(b, 1, 2)
    assert np.allclose(r, b[np.ix_([0, 2], [0, 2])])


def test_reflection_singular_values_contractive():
    rng = np.random.default_rng(4)
    for _ in range(10):
        s = haar_unitary(7, rng)
        r = extract_reflection(s, 2)
        assert np.linalg.norm(r, 2) <= 1.0 + 1e-12


def test_reflection_to_gamma_examples():
    # r = 0: all Gamma at the wall
    sp = reflection_to_gamma(np.zeros((3, 3)), gamma=1.0)
    assert np.allclose(sp.values, 1.0)
    assert np.isclose(sp.s, 1.0)
    # scalar: R = 0.5 -> Gamma = 2, s = 0.5
    sp = reflection_to_gamma(np.array([[np.sqrt(0.5)]]), gamma=1.0)
    assert np.isclose(sp.values[0], 2.0, atol=1e-12)
    assert np.isclose(sp.s, 0.5, atol=1e-12)
    # unitary r: clamped at the cap, flagged saturated
    sp = reflection_to_gamma(np.eye(2), gamma=3.0)
    assert sp.saturated_count == 2
    # 1 - (1 - eps_clamp) carries double granularity, hence the loose rtol
    assert np.allclose(sp.values, 3.0 / 1e-12, rtol=1e-4)


def test_reflection_to_gamma_errors():
    with pytest.raises(AbsorptionRequiredError):
        reflection_to_gamma(np.zeros((2, 2)), gamma=0.0)
    with pytest.raises(NonContractionInputError):
        reflection_to_gamma(1.1 * np.eye(2), gamma=1.0)


def test_dense_pipeline_invariants_all_betas():
    for beta in (1, 2, 4):
        model = CavityModel(n_open=2, gamma=0.8, beta=beta, n_fict=12)
        rng = np.random.default_rng(10 + beta)
        sp = sample_spectrum_dense(model, rng)
        assert sp.n_open == 2
        assert np.all(sp.values >= model.gamma - 1e-9)
        assert sp.s <= 1.0 / model.gamma + 1e-9
