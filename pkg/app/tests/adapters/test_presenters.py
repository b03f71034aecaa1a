"""
Testes para os presenters JSON, CSV e LaTeX.
"""

import json

import pytest

from src.adapters.cli.presenters import CsvPresenter, JsonPresenter, LatexPresenter
from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import CheckDto, JobReportDto, MatrixDto, TableDto


@pytest.fixture
def report():
    return JobReportDto(
        job=JobSpec(type_label="A", rank=1, task="stab-k"),
        root_system="A1",
        group_order=2,
        matrices=[
            MatrixDto(
                title="stab-",
                ring="k-theory",
                rows=["e", "s1"],
                cols=["e", "s1"],
                entries=[["-e[-1]*q + 1", "1 - q"], ["0", "q^{1/2} - e[1]*q^{1/2}"]],
            )
        ],
        tables=[TableDto(title="sinais", headers=["w", "sinal"], rows=[["e", "-"], ["s1", "+"]])],
        checks=[
            CheckDto(name="dualidade", passed=True),
            CheckDto(name="reportada_1", passed=False, asserted=False, detail="info"),
        ],
        passed=True,
    )


class TestJsonPresenter:
    """
    Testes para JsonPresenter.
    """

    def test_parse_returns_same_report(self, report):
        # Act
        text = JsonPresenter.present(report)

        # Assert
        assert text.endswith("\n")
        assert JsonPresenter.parse(text) == report

    def test_key_order_follows_dto(self, report):
        # Act
        document = json.loads(JsonPresenter.present(report))

        # Assert
        assert list(document) == ["job", "root_system", "group_order", "matrices", "tables", "checks", "passed"]
        assert document["job"]["task"] == "stab-k"

    def test_output_is_stable(self, report):
        assert JsonPresenter.present(report) == JsonPresenter.present(report.model_copy(deep=True))


class TestCsvPresenter:
    """
    Testes para CsvPresenter.
    """

    def test_blocks(self, report):
        # Act
        lines = CsvPresenter.present(report).splitlines()

        # Assert
        assert lines[0] == "# stab-k A1"
        assert lines[2] == "# stab- [k-theory]"
        assert lines[3] == ",e,s1"
        assert lines[4] == "e,-e[-1]*q + 1,1 - q"
        assert "# sinais" in lines
        assert "dualidade,true,true," in lines
        assert lines[-1] == "# resultado,aprovado"


class TestLatexPresenter:
    """
    Testes para LatexPresenter.
    """

    @pytest.mark.parametrize(
        "entry, expected",
        [
            ("1 - e[1]", r"1 - e^{\alpha_{1}}"),
            ("e[1,-2]*q", r"e^{\alpha_{1}-2\alpha_{2}} q"),
            ("a1 - h", r"\alpha_{1} - \hbar"),
            ("(1 - e[1])/(1 + q)", r"\frac{1 - e^{\alpha_{1}}}{1 + q}"),
            ("ey[0,1]", r"e_{y}^{\alpha_{2}}"),
        ],
    )
    def test_format_entry(self, entry, expected):
        assert LatexPresenter.format_entry(entry) == expected

    def test_escape(self):
        assert LatexPresenter.escape("reportada_1 & 50%") == r"reportada\_1 \& 50\%"

    def test_present(self, report):
        # Act
        text = LatexPresenter.present(report)

        # Assert
        assert r"\begin{tabular}{c|cc}" in text
        assert "$s1$ & $0$" in text
        assert "% resultado: aprovado" in text
        assert "% falhou" not in text
