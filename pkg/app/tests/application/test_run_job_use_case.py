"""
Testes para o caso de uso RunJobUseCase.

Usa mocks para isolar a fábrica de contêineres e os casos de uso de tarefa.
"""

import pytest

from src.application.dtos.job_dto import JobSpec, Task
from src.application.use_cases.jobs import RunJobUseCase
from src.domain.exceptions import InvalidRootSystemError, ValidationError
from src.infrastructure.startup.service_container import ServiceContainer


class TestRunJobUseCase:
    """
    Testes para o despacho de jobs.
    """

    @pytest.fixture
    def task_use_case(self, mocker):
        use_case_class = mocker.Mock()
        use_case_class.return_value.execute.return_value = mocker.Mock(passed=True)
        return use_case_class

    def test_dispatches_to_task_use_case(self, mocker, task_use_case):
        # Arrange
        factory = mocker.Mock(return_value="contêiner")
        job = JobSpec(type_label="B", rank=2, task="csm")
        run_job = RunJobUseCase(factory, {Task.CSM: task_use_case})

        # Act
        report = run_job.execute(job)

        # Assert
        assert report is task_use_case.return_value.execute.return_value
        factory.assert_called_once_with("B", 2)
        task_use_case.assert_called_once_with("contêiner")
        task_use_case.return_value.execute.assert_called_once_with(job)

    def test_domain_error_is_reraised(self, mocker, task_use_case):
        # Arrange
        task_use_case.return_value.execute.side_effect = ValidationError("Câmara inválida", field="chamber")
        run_job = RunJobUseCase(mocker.Mock(), {Task.STAB_K: task_use_case})

        # Act & Assert
        with pytest.raises(ValidationError, match="Câmara inválida"):
            run_job.execute(JobSpec(type_label="A", rank=1, task="stab-k"))

    def test_unexpected_error_is_reraised(self, mocker, task_use_case):
        # Arrange
        task_use_case.return_value.execute.side_effect = RuntimeError("falha")
        run_job = RunJobUseCase(mocker.Mock(), {Task.MC: task_use_case})

        # Act & Assert
        with pytest.raises(RuntimeError, match="falha"):
            run_job.execute(JobSpec(type_label="A", rank=1, task="mc"))

    def test_invalid_root_system(self):
        # Arrange
        run_job = RunJobUseCase(ServiceContainer)

        # Act & Assert
        with pytest.raises(InvalidRootSystemError, match="Sistema de raízes inválido"):
            run_job.execute(JobSpec(type_label="E", rank=2, task="stab-k"))

    def test_every_task_has_a_use_case(self):
        assert set(RunJobUseCase.USE_CASES) == set(Task)

    def test_end_to_end_a1(self):
        # Arrange
        run_job = RunJobUseCase(ServiceContainer)

        # Act
        report = run_job.execute(JobSpec(type_label="A", rank=1, task="padic"))

        # Assert
        assert report.root_system == "A1"
        assert report.passed is True
