"""Exact tools for unit grid intersection graphs and their relatives."""

__version__ = "0.1.0"
