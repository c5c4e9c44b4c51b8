"""Exact cohomology computations for SU(2) representation spaces of surface groups."""

__version__ = "0.1.0"
