"""Paradoxes of the majority rule in binary aggregation with integrity constraints."""

__version__ = "1.0.0"
