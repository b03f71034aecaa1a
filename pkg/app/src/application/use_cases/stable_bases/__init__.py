# Stable Basis Use Cases

from .compute_k_stable_basis_use_case import ComputeKStableBasisUseCase
from .compute_coh_stable_basis_use_case import ComputeCohStableBasisUseCase
from .cross_wall_use_case import CrossWallUseCase

__all__ = [
    "ComputeKStableBasisUseCase",
    "ComputeCohStableBasisUseCase",
    "CrossWallUseCase",
]
