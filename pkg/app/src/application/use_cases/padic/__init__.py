# p-adic Use Cases

from .compute_transition_matrix_use_case import ComputeTransitionMatrixUseCase

__all__ = [
    "ComputeTransitionMatrixUseCase",
]
