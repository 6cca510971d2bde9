"""Finite-dimensional algebras, their module categories, and a mechanical
check of the degree-zero Auslander correspondence."""

__version__ = "0.1.0"
