"""Exact spectral tools for small graphs: characteristic polynomials, canonical
enumeration and exhaustive cospectral-mate search."""
from dqslab.graph_core import Graph

__version__ = "0.1.0"
__all__ = ["Graph", "__version__"]
