"""Identifier-definition discovery for math-heavy wiki articles."""

__version__ = "0.1.0"
