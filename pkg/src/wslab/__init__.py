"""Wigner-Smith time-delay laboratory for absorbing chaotic cavities."""

__version__ = "0.1.0"
