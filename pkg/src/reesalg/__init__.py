"""Exact computation of Rees algebra equations for height-2 ideals of binary forms."""

__version__ = "0.1.0"
