"""Exact-arithmetic checks for character degree arguments on finite simple groups."""

__version__ = "0.1.0"
