"""Coupled two-gas equilibrium solver and large-N time-delay asymptotics."""

from .density import DiscretizedDensity
from .tricomi import tricomi_invert
from .two_gas import SolverSettings, TwoGasState, energy, energy_breakdown, solve_two_gas
from .zero_absorption import solve_zero_absorption, zero_absorption_phi_derivative
from .asymptotics import (
    cumulants_from_phi,
    cumulants_of_s,
    phi_derivative,
    strong_absorption_density,
    strong_absorption_density_values,
    weak_absorption_cumulants,
)

__all__ = [
    "DiscretizedDensity",
    "SolverSettings",
    "TwoGasState",
    "cumulants_from_phi",
    "cumulants_of_s",
    "energy",
    "energy_breakdown",
    "phi_derivative",
    "solve_two_gas",
    "solve_zero_absorption",
    "strong_absorption_density",
    "strong_absorption_density_values",
    "tricomi_invert",
    "weak_absorption_cumulants",
    "zero_absorption_phi_derivative",
]
