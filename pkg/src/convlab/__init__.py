"""Finite convergence spaces: covers, completeness, the closed-set dual and paving numbers."""

from .families import Carrier, CapacityError, PFilter
from .space import Convergence, InvalidSpace, validate

__all__ = ["Carrier", "CapacityError", "PFilter", "Convergence", "InvalidSpace", "validate"]
