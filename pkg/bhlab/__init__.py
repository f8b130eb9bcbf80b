"""Combinatorial dimension of monomial index sets and numerical checks of the restricted
Bohnenblust-Hille inequality."""

__version__ = "0.1.0"
