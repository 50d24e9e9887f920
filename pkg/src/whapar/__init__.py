"""Exact computations with weak Hopf algebras and their partial representations."""

from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
