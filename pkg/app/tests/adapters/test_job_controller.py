"""
Testes para o controller da linha de comando.

Os casos de uso são substituídos por mocks para exercitar os status de saída.
"""

import io
import json

import pytest

from src.adapters.cli.controller import (
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    JobController,
)
from src.adapters.persistence.gateways.file_artifact_gateway import FileArtifactGateway
from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import CheckDto, JobReportDto
from src.application.use_cases.jobs import RunJobUseCase
from src.domain.exceptions import ConsistencyError, ParseError
from src.infrastructure.startup.service_container import ServiceContainer

ARGV = ["verify", "--type", "A", "--rank", "1"]


def _report(passed: bool = True) -> JobReportDto:
    return JobReportDto(
        job=JobSpec(type_label="A", rank=1, task="verify"),
        root_system="A1",
        group_order=2,
        checks=[CheckDto(name="dualidade", passed=passed)],
        passed=passed,
    )


class TestJobController:
    """
    Testes para JobController.
    """

    @pytest.fixture
    def streams(self):
        return io.StringIO(), io.StringIO()

    @pytest.fixture
    def run_job(self, mocker):
        return mocker.Mock()

    @pytest.fixture
    def controller(self, run_job, streams):
        stdout, stderr = streams
        return JobController(run_job, stdout=stdout, stderr=stderr)

    def test_success(self, controller, run_job, streams):
        # Arrange
        run_job.execute.return_value = _report()

        # Act
        status = controller.run(ARGV)

        # Assert
        assert status == EXIT_OK
        assert json.loads(streams[0].getvalue())["passed"] is True
        run_job.execute.assert_called_once()

    def test_failed_verification(self, controller, run_job, streams):
        # Arrange
        run_job.execute.return_value = _report(passed=False)

        # Act
        status = controller.run(ARGV)

        # Assert
        assert status == EXIT_VERIFICATION_FAILED
        assert "Verificação reprovada: dualidade" in streams[1].getvalue()

    def test_usage_errors(self, controller, run_job):
        # Act & Assert
        assert controller.run(["verify", "--type", "A"]) == EXIT_USAGE
        assert controller.run(["verify", "--type", "A", "--rank", "1", "--cell", "Z"]) == EXIT_USAGE
        run_job.execute.assert_not_called()

    def test_domain_error_is_usage_error(self, controller, run_job, streams):
        # Arrange
        run_job.execute.side_effect = ParseError("s9", "palavra de Weyl")

        # Act
        status = controller.run(ARGV)

        # Assert
        assert status == EXIT_USAGE
        assert "Erro de entrada" in streams[1].getvalue()

    def test_consistency_error_is_internal(self, controller, run_job):
        # Arrange
        run_job.execute.side_effect = ConsistencyError("rotas divergentes")

        # Act & Assert
        assert controller.run(ARGV) == EXIT_INTERNAL

    def test_unexpected_error_is_internal(self, controller, run_job, streams):
        # Arrange
        run_job.execute.side_effect = RuntimeError("falha")

        # Act
        status = controller.run(ARGV)

        # Assert
        assert status == EXIT_INTERNAL
        assert "Erro inesperado: falha" in streams[1].getvalue()

    def test_log_level_is_configured(self, mocker, run_job, streams):
        # Arrange
        configure = mocker.Mock()
        run_job.execute.return_value = _report()
        controller = JobController(run_job, configure_logging=configure, stdout=streams[0], stderr=streams[1])

        # Act
        controller.run(ARGV + ["--log-level", "info"])

        # Assert
        configure.assert_called_once_with("INFO")

    def test_artifact_is_saved(self, run_job, streams, tmp_path):
        # Arrange
        run_job.execute.return_value = _report()
        controller = JobController(
            run_job, artifact_factory=FileArtifactGateway, stdout=streams[0], stderr=streams[1]
        )

        # Act
        status = controller.run(ARGV + ["--output-dir", str(tmp_path)])

        # Assert
        name = JobController.artifact_name(_report().job)
        assert status == EXIT_OK
        assert (tmp_path / name).read_text(encoding="utf-8") == streams[0].getvalue()

    def test_artifact_name_is_deterministic(self):
        # Arrange
        job = JobSpec(type_label="B", rank=2, task="csm", output_format="csv")

        # Act
        name = JobController.artifact_name(job)

        # Assert
        assert name == JobController.artifact_name(job.model_copy())
        assert name.startswith("csm-B2-")
        assert name.endswith(".csv")

    def test_identical_jobs_give_identical_output(self):
        """
        Testa a saída byte a byte de duas execuções reais em A1.
        """
        # Arrange
        outputs = []
        for _ in range(2):
            stdout = io.StringIO()
            controller = JobController(RunJobUseCase(ServiceContainer), stdout=stdout, stderr=io.StringIO())

            # Act
            status = controller.run(["stab-k", "--type", "A", "--rank", "1", "--format", "csv"])
            outputs.append(stdout.getvalue())
            assert status == EXIT_OK

        # Assert
        assert outputs[0] == outputs[1]
        assert outputs[0].startswith("# stab-k A1")
