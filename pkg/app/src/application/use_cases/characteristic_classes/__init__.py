# Characteristic Class Use Cases

from .compute_csm_classes_use_case import ComputeCSMClassesUseCase
from .compute_motivic_classes_use_case import ComputeMotivicClassesUseCase

__all__ = [
    "ComputeCSMClassesUseCase",
    "ComputeMotivicClassesUseCase",
]
