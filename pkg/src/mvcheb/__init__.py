"""Exact construction and verification of matrix-valued Chebyshev-type
orthogonal polynomials."""

__version__ = "0.1.0"
