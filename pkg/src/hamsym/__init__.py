"""Hamiltonian cycles up to graph symmetry."""

__version__ = "0.1.0"
