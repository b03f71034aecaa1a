import csv
import io

from src.application.dtos.report_dto import JobReportDto


class CsvPresenter:
    """
    Presenter para a saída CSV.

    Cada bloco (matriz, tabela, verificações) começa por uma linha
    "# título" e termina numa linha vazia.
    """

    extension = "csv"

    @staticmethod
    def present(report: JobReportDto) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([f"# {report.job.task.value} {report.root_system}"])
        writer.writerow([])
        for matrix in report.matrices:
            writer.writerow([f"# {matrix.title} [{matrix.ring}]"])
            writer.writerow([""] + matrix.cols)
            for label, row in zip(matrix.rows, matrix.entries):
                writer.writerow([label] + row)
            writer.writerow([])
        for table in report.tables:
            writer.writerow([f"# {table.title}"])
            writer.writerow(table.headers)
            writer.writerows(table.rows)
            writer.writerow([])
        if report.checks:
            writer.writerow(["# verificações"])
            writer.writerow(["nome", "aprovada", "afirmada", "detalhe"])
            for check in report.checks:
                writer.writerow([check.name, str(check.passed).lower(), str(check.asserted).lower(), check.detail])
            writer.writerow([])
        writer.writerow(["# resultado", "aprovado" if report.passed else "reprovado"])
        return buffer.getvalue()
