"""Finite-model toolkit for Menger algebras of n-place interior operations."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .transform import KernelTransformation, NPlaceTransformation, Witness

__all__ = ["KERNEL_BACKEND", "KernelTransformation", "NPlaceTransformation", "Witness"]
__version__ = "0.1.0"
