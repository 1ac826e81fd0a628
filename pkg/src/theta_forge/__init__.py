"""Norm-set constructions in PG(n, q) and {C4, theta(3,t)}-freeness certificates."""

__version__ = "0.1.0"
