"""
Ponto de entrada da linha de comando.

Uso: python -m src.main <tarefa> --type A --rank 2 [opções]
"""

import logging
import sys
from typing import Optional, Sequence

from config.logging_config import setup_logging

# Infrastructure imports
from src.infrastructure.config.settings import settings
from src.infrastructure.startup.service_container import ServiceContainer

# Use cases imports
from src.application.use_cases.jobs import RunJobUseCase

# Adapters imports
from src.adapters.cli.controller import JobController
from src.adapters.cli.router import CliRouter
from src.adapters.persistence.gateways.file_artifact_gateway import FileArtifactGateway

logger = logging.getLogger(__name__)


def create_controller() -> JobController:
    """
    Factory do controller da linha de comando.

    Aplicando o princípio Dependency Inversion Principle (DIP) -
    configurando todas as dependências e injeções aqui.

    Returns:
        JobController: Controller pronto para executar jobs
    """
    run_job_use_case = RunJobUseCase(container_factory=ServiceContainer)
    return JobController(
        run_job_use_case=run_job_use_case,
        router=CliRouter(prog="python -m src.main"),
        artifact_factory=FileArtifactGateway,
        configure_logging=setup_logging,
        default_output_dir=settings.output_dir,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging(settings.log_level)
    logger.debug(f"{settings.app_name} v{settings.app_version}")
    return create_controller().run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
