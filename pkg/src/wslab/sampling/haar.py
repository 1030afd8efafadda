"""Haar sampling in the three symmetry classes, with structure predicates.

beta = 2: QR of a complex Ginibre matrix with the phase-of-R-diagonal
correction (plain QR is not Haar).  beta = 1: U = W W^T with W Haar, the
circular orthogonal ensemble of symmetric unitaries.  beta = 4: U = W^R W in
the 2*dim complex embedding, where W^R = J W^T J^T is the symplectic dual;
the result is self-dual unitary with Kramers-degenerate spectra.
"""

from __future__ import annotations

import numpy as np

from ..errors import InvalidDimensionError
from .dyson import DysonClass


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed U(dim) matrix (Mezzadri phase correction)."""
    if dim < 1:
        raise InvalidDimensionError("dimension must be >= 1")
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def symplectic_form(n: int) -> np.ndarray:
    """J = [[0, I_n], [-I_n, 0]]."""
    j = np.zeros((2 * n, 2 * n))
    j[:n, n:] = np.eye(n)
    j[n:, :n] = -np.eye(n)
    return j


def symplectic_dual(a: np.ndarray) -> np.ndarray:
    """A^R = J A^T J^T for even-dimensional A."""
    n = a.shape[0] // 2
    j = symplectic_form(n)
    return j @ a.T @ j.T


def sample_haar(dim: int, beta: int | DysonClass, rng: np.random.Generator) -> np.ndarray:
    """Random scattering matrix of class beta.

    Returns a dim x dim matrix for beta in {1, 2} and the 2*dim complex
    embedding for beta = 4.
    """
    b = beta.beta if isinstance(beta, DysonClass) else DysonClass(beta).beta
    if dim < 1:
        raise InvalidDimensionError("dimension must be >= 1")
    if b == 2:
        return haar_unitary(dim, rng)
    if b == 1:
        w = haar_unitary(dim, rng)
        return w @ w.T
    w = haar_unitary(2 * dim, rng)
    return symplectic_dual(w) @ w


def unitarity_defect(u: np.ndarray) -> float:
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def symmetry_defect(u: np.ndarray) -> float:
    return float(np.max(np.abs(u - u.T)))


def self_dual_defect(u: np.ndarray) -> float:
    return float(np.max(np.abs(symplectic_dual(u) - u)))


def structure_defects(u: np.ndarray, beta: int) -> dict[str, float]:
    """Residuals of the class invariants a sampled matrix must satisfy."""
    out = {"unitarity": unitarity_defect(u)}
    if beta == 1:
        out["symmetry"] = symmetry_defect(u)
    elif beta == 4:
        out["self_duality"] = self_dual_defect(u)
    return out
