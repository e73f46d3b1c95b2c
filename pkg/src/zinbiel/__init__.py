"""Exact tools for Zinbiel algebras and their extending structures."""

__version__ = "0.1.0"
