import logging

from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import JobReportDto
from src.application.services.report_assembler import ReportAssembler
from src.application.services.verification_suite import VerificationSuite
from src.domain.exceptions import DomainError
from src.infrastructure.config.settings import settings

logger = logging.getLogger(__name__)


class RunVerificationUseCase:
    """
    Caso de uso para executar uma bateria de verificação.

    A semente e o número de vetores aleatórios vêm da configuração; a
    bateria longa é ligada por --long ou por LONG_SUITE.
    """

    def __init__(self, container):
        self._container = container

    def execute(self, job: JobSpec) -> JobReportDto:
        """
        Args:
            job: Job com a bateria pedida

        Returns:
            JobReportDto: Vereditos, sem matrizes
        """
        try:
            suite = VerificationSuite(
                self._container,
                seed=settings.random_seed,
                random_vectors=settings.random_vectors,
                long_suite=job.long or settings.long_suite,
            )
            report = suite.run(job.suite)
            if not report.passed:
                logger.warning(f"{len(report.failures())} verificações falharam em {suite.label}")
            return ReportAssembler(job.substitutions).report(job, self._container, verification=report)

        except DomainError as e:
            logger.error(f"Erro ao executar a verificação: {str(e)}")
            raise e
        except Exception as e:
            logger.error(f"Erro inesperado ao executar a verificação: {str(e)}")
            raise
