import re
from typing import List, Sequence

from src.application.dtos.report_dto import JobReportDto, MatrixDto

_CHARACTER = re.compile(r"(e|ey)\[(-?\d+(?:,-?\d+)*)\]")
_ROOT = re.compile(r"\ba(\d+)\b")
_HBAR = re.compile(r"\bh\b")
_SPECIAL = {"&": r"\&", "%": r"\%", "#": r"\#", "_": r"\_", "$": r"\$"}


def _root_combination(coords: Sequence[int]) -> str:
    """Σ c_i α_i em notação LaTeX, sem termos nulos."""
    pieces: List[str] = []
    for i, c in enumerate(coords, start=1):
        if not c:
            continue
        body = rf"\alpha_{{{i}}}"
        magnitude = "" if abs(c) == 1 else str(abs(c))
        if c < 0:
            pieces.append(f"-{magnitude}{body}")
        else:
            pieces.append(f"{'+' if pieces else ''}{magnitude}{body}")
    return "".join(pieces)


def _split_fraction(text: str):
    """Separa "(N)/(D)" no nível mais externo; devolve None se não for fração."""
    if not text.startswith("("):
        return None
    depth = 0
    for index, char in enumerate(text):
        depth += {"(": 1, ")": -1}.get(char, 0)
        if depth == 0:
            rest = text[index + 1:]
            if rest.startswith("/(") and rest.endswith(")"):
                return text[1:index], rest[2:-1]
            return None
    return None


class LatexPresenter:
    """
    Presenter para tabelas LaTeX.

    Caracteres e[c1,...] viram e^{c1α1+...}; em cohomologia a_i vira α_i e
    h vira ħ.
    """

    extension = "tex"

    @staticmethod
    def escape(text: str) -> str:
        return "".join(_SPECIAL.get(char, char) for char in text)

    @staticmethod
    def format_entry(text: str) -> str:
        """
        Converte a forma textual canônica de um elemento do anel em LaTeX.

        Args:
            text: Entrada de MatrixDto

        Returns:
            str: Expressão LaTeX (sem delimitadores $)
        """
        fraction = _split_fraction(text)
        if fraction is not None:
            numer, denom = fraction
            return rf"\frac{{{LatexPresenter.format_entry(numer)}}}{{{LatexPresenter.format_entry(denom)}}}"

        def character(match: re.Match) -> str:
            coords = [int(c) for c in match.group(2).split(",")]
            base = "e" if match.group(1) == "e" else r"e_{y}"
            return f"{base}^{{{_root_combination(coords)}}}"

        out = _CHARACTER.sub(character, text)
        out = _ROOT.sub(lambda m: rf"\alpha_{{{m.group(1)}}}", out)
        out = _HBAR.sub(r"\\hbar", out)
        return out.replace("*", " ")

    @staticmethod
    def present_matrix(matrix: MatrixDto) -> str:
        lines = [
            f"% {LatexPresenter.escape(matrix.title)} [{matrix.ring}]",
            r"\begin{tabular}{c|" + "c" * len(matrix.cols) + "}",
            " & ".join([""] + [f"${col}$" for col in matrix.cols]) + r" \\",
            r"\hline",
        ]
        for label, row in zip(matrix.rows, matrix.entries):
            cells = [f"${label}$"] + [f"${LatexPresenter.format_entry(entry)}$" for entry in row]
            lines.append(" & ".join(cells) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def present(report: JobReportDto) -> str:
        blocks = [f"% {report.job.task.value} {report.root_system}\n"]
        blocks.extend(LatexPresenter.present_matrix(matrix) for matrix in report.matrices)
        for table in report.tables:
            lines = [
                f"% {LatexPresenter.escape(table.title)}",
                r"\begin{tabular}{" + "l" * len(table.headers) + "}",
                " & ".join(LatexPresenter.escape(h) for h in table.headers) + r" \\",
                r"\hline",
            ]
            lines.extend(" & ".join(LatexPresenter.escape(c) for c in row) + r" \\" for row in table.rows)
            lines.append(r"\end{tabular}")
            blocks.append("\n".join(lines) + "\n")
        failures = [check.name for check in report.checks if check.asserted and not check.passed]
        blocks.append(f"% resultado: {'aprovado' if report.passed else 'reprovado'}\n")
        blocks.extend(f"% falhou: {LatexPresenter.escape(name)}\n" for name in failures)
        return "\n".join(blocks)
