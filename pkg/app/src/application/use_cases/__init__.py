# Application Use Cases

# Stable Basis Use Cases
from .stable_bases import (
    ComputeKStableBasisUseCase,
    ComputeCohStableBasisUseCase,
    CrossWallUseCase,
)

# Root Polynomial Use Cases
from .root_polynomials import ComputeRootPolynomialsUseCase

# Characteristic Class Use Cases
from .characteristic_classes import (
    ComputeCSMClassesUseCase,
    ComputeMotivicClassesUseCase,
)

# p-adic Use Cases
from .padic import ComputeTransitionMatrixUseCase

# Verification Use Cases
from .verification import RunVerificationUseCase

# Job Use Cases
from .jobs import RunJobUseCase

__all__ = [
    "ComputeKStableBasisUseCase",
    "ComputeCohStableBasisUseCase",
    "CrossWallUseCase",
    "ComputeRootPolynomialsUseCase",
    "ComputeCSMClassesUseCase",
    "ComputeMotivicClassesUseCase",
    "ComputeTransitionMatrixUseCase",
    "RunVerificationUseCase",
    "RunJobUseCase",
]
