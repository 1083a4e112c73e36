"""Arithmetic of qudit Pauli graphs, Goldbach pairs and primorial inequalities."""

from qudit_goldbach.errors import CapacityError, DomainError

__version__ = "0.1.0"

__all__ = ["CapacityError", "DomainError", "__version__"]
