"""Exact graph powers and verification of average-degree lower bounds."""

__version__ = "0.1.0"
