# Verification Use Cases

from .run_verification_use_case import RunVerificationUseCase

__all__ = [
    "RunVerificationUseCase",
]
