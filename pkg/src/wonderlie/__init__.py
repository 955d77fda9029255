"""Exact computational checks for adjoint vector fields and covariant modules."""

__version__ = "0.1.0"
