"""Exact verification of pentagon-density bounds in clique-free graphs."""

from pentabound._kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
