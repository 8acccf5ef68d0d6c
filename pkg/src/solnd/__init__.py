"""Proof checking and finite-model tools for classical second-order logic."""

__version__ = "0.1.0"
