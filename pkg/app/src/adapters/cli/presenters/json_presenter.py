import json

from src.application.dtos.report_dto import JobReportDto


class JsonPresenter:
    """
    Presenter para a saída JSON de um job.

    A ordem das chaves segue a declaração dos DTOs e as matrizes seguem a
    ordem canônica de W, então a saída é estável byte a byte.
    """

    extension = "json"

    @staticmethod
    def present(report: JobReportDto) -> str:
        """
        Args:
            report: Relatório do job

        Returns:
            str: Documento JSON terminado em nova linha
        """
        return json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def parse(text: str) -> JobReportDto:
        """Valida um documento contra o esquema de JobReportDto."""
        return JobReportDto.model_validate_json(text)
