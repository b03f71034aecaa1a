# Job Use Cases

from .run_job_use_case import RunJobUseCase

__all__ = [
    "RunJobUseCase",
]
