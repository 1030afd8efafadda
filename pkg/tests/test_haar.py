"""Structure and invariance of the Haar samplers."""

import numpy as np
import pytest
from scipy.stats import ks_2samp

from wslab.errors import InvalidDimensionError
from wslab.sampling import (
    haar_unitary,
    sample_haar,
    self_dual_defect,
    structure_defects,
    symmetry_defect,
    unitarity_defect,
)


def test_dimension_one_is_pure_phase():
    rng = np.random.default_rng(0)
    u = sample_haar(1, 2, rng)
    assert u.shape == (1, 1)
    assert abs(abs(u[0, 0]) - 1.0) < 1e-15


def test_zero_dimension_rejected():
    with pytest.raises(InvalidDimensionError):
        sample_haar(0, 2, np.random.default_rng(0))


@pytest.mark.parametrize("beta,dim", [(1, 8), (2, 8), (4, 4)])
def test_class_invariants(beta, dim):
    rng = np.random.default_rng(7)
    for _ in range(20):
        u = sample_haar(dim, beta, rng)
        assert unitarity_defect(u) < 1e-12
        if beta == 1:
            assert symmetry_defect(u) < 1e-12
        if beta == 4:
            assert u.shape == (2 * dim, 2 * dim)
            assert self_dual_defect(u) < 1e-12


def test_structure_defects_keys():
    rng = np.random.default_rng(1)
    assert set(structure_defects(sample_haar(3, 1, rng), 1)) == {"unitarity", "symmetry"}
    assert set(structure_defects(sample_haar(3, 4, rng), 4)) == {"unitarity", "self_duality"}


def test_haar_left_invariance_two_sample_ks():
    # |(VU)_{11}| and |U_{11}| must agree in law for fixed unitary V
    rng = np.random.default_rng(42)
    dim, nsamp = 4, 10_000
    v = haar_unitary(dim, np.random.default_rng(999))
    plain = np.empty(nsamp)
    rotated = np.empty(nsamp)
    for i in range(nsamp):
        u = haar_unitary(dim, rng)
        plain[i] = abs(u[0, 0])
        u2 = haar_unitary(dim, rng)
        rotated[i] = abs((v @ u2)[0, 0])
    assert ks_2samp(plain, rotated).pvalue > 0.01


def test_phase_correction_matters_for_haar():
    # raw QR biases |U_{11}|; the corrected sampler matches the Haar law
    # P(|U_11| <= x) = 1 - (1-x^2)^(dim-1)
    rng = np.random.default_rng(3)
    dim, nsamp = 3, 20_000
    vals = np.array([abs(haar_unitary(dim, rng)[0, 0]) for i in range(nsamp)])
    grid = np.linspace(0.05, 0.95, 10)
    cdf_emp = np.searchsorted(np.sort(vals), grid) / nsamp
    cdf_true = 1.0 - (1.0 - grid**2) ** (dim - 1)
    assert np.max(np.abs(cdf_emp - cdf_true)) < 0.02
