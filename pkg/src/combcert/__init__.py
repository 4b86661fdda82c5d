"""Exact verification of a family of combinatorial identities and bounds."""

__version__ = "0.1.0"
