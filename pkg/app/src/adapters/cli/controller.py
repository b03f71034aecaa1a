"""
Controller da linha de comando - Adapters Layer

Aplicando Clean Architecture e SOLID Principles
"""

import hashlib
import logging
import sys
from typing import Callable, Optional, Sequence, TextIO

from pydantic import ValidationError as PydanticValidationError

from src.adapters.cli.presenters import CsvPresenter, JsonPresenter, LatexPresenter
from src.adapters.cli.router import CliRouter
from src.application.dtos.job_dto import JobSpec, OutputFormat
from src.application.dtos.report_dto import JobReportDto
from src.application.use_cases.jobs import RunJobUseCase
from src.domain.exceptions import ConsistencyError, DomainError
from src.domain.ports.artifact_repository import ArtifactRepository

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_VERIFICATION_FAILED = 3


class JobController:
    """
    Controller dos jobs de linha de comando.

    Aplicando o princípio Single Responsibility Principle (SRP) -
    responsável apenas por coordenar roteador, caso de uso e presenter.

    Aplicando o princípio Dependency Inversion Principle (DIP) -
    depende de abstrações (caso de uso, repositório de artefatos).

    Status de saída: 0 sucesso, 2 uso inválido, 3 verificação reprovada,
    1 inconsistência interna ou erro inesperado.
    """

    PRESENTERS = {
        OutputFormat.JSON: JsonPresenter,
        OutputFormat.CSV: CsvPresenter,
        OutputFormat.LATEX: LatexPresenter,
    }

    def __init__(
        self,
        run_job_use_case: RunJobUseCase,
        router: Optional[CliRouter] = None,
        artifact_factory=None,
        configure_logging: Optional[Callable[[str], None]] = None,
        default_output_dir: str = "artifacts",
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
    ):
        self._run_job_use_case = run_job_use_case
        self._router = router or CliRouter()
        self._artifact_factory = artifact_factory
        self._configure_logging = configure_logging
        self._default_output_dir = default_output_dir
        self._stdout = stdout or sys.stdout
        self._stderr = stderr or sys.stderr

    def present(self, report: JobReportDto) -> str:
        return self.PRESENTERS[report.job.output_format].present(report)

    @staticmethod
    def artifact_name(job: JobSpec) -> str:
        """Nome determinístico: tarefa, sistema e um resumo do job."""
        digest = hashlib.sha1(job.to_text().encode("utf-8")).hexdigest()[:10]
        extension = JobController.PRESENTERS[job.output_format].extension
        return f"{job.task.value}-{job.type_label}{job.rank}-{digest}.{extension}"

    def run(self, argv: Sequence[str]) -> int:
        """
        Executa um job a partir de argv.

        Args:
            argv: Argumentos sem o nome do programa

        Returns:
            int: Status de saída
        """
        try:
            job, options = self._router.parse(argv)
        except SystemExit as e:
            return EXIT_USAGE if e.code else EXIT_OK
        except PydanticValidationError as e:
            self._stderr.write(f"Job inválido: {e}\n")
            return EXIT_USAGE

        if options.log_level and self._configure_logging is not None:
            self._configure_logging(options.log_level)

        try:
            report = self._run_job_use_case.execute(job)
            content = self.present(report)
            self._stdout.write(content)
            if (options.save or options.output_dir) and self._artifact_factory is not None:
                directory = options.output_dir or self._default_output_dir
                repository: ArtifactRepository = self._artifact_factory(directory)
                repository.save(self.artifact_name(job), content)
        except ConsistencyError as e:
            self._stderr.write(f"Inconsistência interna: {e}\n")
            return EXIT_INTERNAL
        except DomainError as e:
            self._stderr.write(f"Erro de entrada: {e}\n")
            return EXIT_USAGE
        except Exception as e:
            logger.exception(f"Erro inesperado: {str(e)}")
            self._stderr.write(f"Erro inesperado: {e}\n")
            return EXIT_INTERNAL

        if not report.passed:
            for check in report.failures:
                self._stderr.write(f"Verificação reprovada: {check.name}\n")
            return EXIT_VERIFICATION_FAILED
        return EXIT_OK

