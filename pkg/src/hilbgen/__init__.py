"""Exact and asymptotic chi_y-genus coefficients of Hilbert schemes of K3."""

__version__ = "0.1.0"
