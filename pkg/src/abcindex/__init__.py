"""Atom-bond connectivity index: extremal constructions and brute-force checks."""

__version__ = "0.1.0"
