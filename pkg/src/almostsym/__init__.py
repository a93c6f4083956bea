"""Exact classification of almost symmetric orbits of s-representations."""

__version__ = "0.1.0"
