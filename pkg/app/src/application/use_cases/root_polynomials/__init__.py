# Root Polynomial Use Cases

from .compute_root_polynomials_use_case import ComputeRootPolynomialsUseCase

__all__ = [
    "ComputeRootPolynomialsUseCase",
]
