"""Sieved Jacobi polynomials on the circle and the real line, with exact
verification of their Dunkl-type eigenvalue equations."""

__version__ = "0.1.0"
