"""Exact verification of the semistable degeneration of the Fano surface over the Segre primal."""

__version__ = "0.1.0"
