"""Least periods of Farhi arithmetic functions, computed exactly."""

__version__ = "0.1.0"
