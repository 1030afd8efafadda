"""Scattering-matrix sampling for the fictitious-channel absorption model."""

from .dyson import (
    CavityModel,
    DysonClass,
    GammaSpectrum,
    default_n_fict,
    spectrum_from_reflection_eigenvalues,
)
from .haar import (
    haar_unitary,
    sample_haar,
    self_dual_defect,
    structure_defects,
    symmetry_defect,
    symplectic_dual,
    symplectic_form,
    unitarity_defect,
)
from .coupling import (
    apply_coupling,
    extract_reflection,
    extract_reflection_embedded,
    mean_matrix,
    reflection_to_gamma,
    sample_spectrum_dense,
)
from .ensemble import resolve_method, sample_ensemble, spectra_to_rows

__all__ = [
    "CavityModel",
    "DysonClass",
    "GammaSpectrum",
    "apply_coupling",
    "default_n_fict",
    "extract_reflection",
    "extract_reflection_embedded",
    "haar_unitary",
    "mean_matrix",
    "reflection_to_gamma",
    "resolve_method",
    "sample_ensemble",
    "sample_haar",
    "sample_spectrum_dense",
    "self_dual_defect",
    "spectra_to_rows",
    "spectrum_from_reflection_eigenvalues",
    "structure_defects",
    "symmetry_defect",
    "symplectic_dual",
    "symplectic_form",
    "unitarity_defect",
]
