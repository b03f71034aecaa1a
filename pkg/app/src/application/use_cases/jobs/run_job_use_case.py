import logging
from typing import Callable, Dict, Optional

from src.application.dtos.job_dto import JobSpec, Task
from src.application.dtos.report_dto import JobReportDto
from src.application.use_cases.characteristic_classes import (
    ComputeCSMClassesUseCase,
    ComputeMotivicClassesUseCase,
)
from src.application.use_cases.padic import ComputeTransitionMatrixUseCase
from src.application.use_cases.root_polynomials import ComputeRootPolynomialsUseCase
from src.application.use_cases.stable_bases import (
    ComputeCohStableBasisUseCase,
    ComputeKStableBasisUseCase,
    CrossWallUseCase,
)
from src.application.use_cases.verification import RunVerificationUseCase
from src.domain.exceptions import DomainError

logger = logging.getLogger(__name__)


class RunJobUseCase:
    """
    Caso de uso que executa um JobSpec de ponta a ponta.

    Aplicando o princípio Open/Closed Principle (OCP) -
    novas tarefas entram pelo mapa de casos de uso, sem alterar execute().

    Aplicando o princípio Dependency Inversion Principle (DIP) -
    recebe a fábrica de contêineres em vez de construir serviços.
    """

    USE_CASES: Dict[Task, Callable] = {
        Task.STAB_K: ComputeKStableBasisUseCase,
        Task.STAB_COH: ComputeCohStableBasisUseCase,
        Task.ROOTPOLY: ComputeRootPolynomialsUseCase,
        Task.CSM: ComputeCSMClassesUseCase,
        Task.MC: ComputeMotivicClassesUseCase,
        Task.PADIC: ComputeTransitionMatrixUseCase,
        Task.WALL: CrossWallUseCase,
        Task.VERIFY: RunVerificationUseCase,
    }

    def __init__(self, container_factory: Callable, use_cases: Optional[Dict[Task, Callable]] = None):
        self._container_factory = container_factory
        self._use_cases = dict(use_cases or self.USE_CASES)

    def execute(self, job: JobSpec) -> JobReportDto:
        """
        Args:
            job: Job validado

        Returns:
            JobReportDto: Relatório da tarefa

        Raises:
            InvalidRootSystemError: Para (tipo, posto) inválidos
        """
        try:
            logger.info(f"Iniciando job {job.to_text()}")
            container = self._container_factory(job.type_label, job.rank)
            report = self._use_cases[job.task](container).execute(job)
            logger.info(f"Job {job.task.value} concluído: {'aprovado' if report.passed else 'reprovado'}")
            return report

        except DomainError as e:
            logger.error(f"Erro ao executar job: {str(e)}")
            raise e
        except Exception as e:
            logger.error(f"Erro inesperado ao executar job: {str(e)}")
            raise
