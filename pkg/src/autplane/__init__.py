"""Exact computations with plane polynomial automorphisms and their linear models."""

__version__ = "0.1.0"
