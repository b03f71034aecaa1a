"""
Montagem de matrizes, tabelas e relatórios de saída.

Aplica as especializações pedidas ("q=1", "h=1", ...) e converte cada
entrada para a forma textual canônica do anel, de modo que jobs idênticos
produzem exatamente o mesmo texto.
"""

import logging
from fractions import Fraction
from math import isqrt
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import CheckDto, JobReportDto, MatrixDto, TableDto
from src.domain.entities.laurent_poly import RatFunc, RingKind
from src.domain.entities.verification_report import VerificationReport
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import ValidationError

logger = logging.getLogger(__name__)


def _exact_sqrt(value: Fraction) -> Fraction:
    if value < 0:
        raise ValidationError(f"q={value} não tem raiz quadrada racional", field="substitutions")
    numer, denom = isqrt(value.numerator), isqrt(value.denominator)
    if numer * numer != value.numerator or denom * denom != value.denominator:
        raise ValidationError(f"q={value} não tem raiz quadrada racional", field="substitutions")
    return Fraction(numer, denom)


class ReportAssembler:
    """Converte resultados do domínio em DTOs de saída."""

    def __init__(self, substitutions: Sequence[str] = ()):
        self.substitutions: List[Tuple[str, Fraction]] = []
        for text in substitutions:
            name, value = text.split("=", 1)
            self.substitutions.append((name.strip(), Fraction(value.strip())))

    def specialize(self, f: RatFunc) -> RatFunc:
        """
        Raises:
            ValidationError: Para variáveis fora do anel ou denominadores anulados
        """
        ring = f.ring
        for name, value in self.substitutions:
            slot = ring.slot_of(name)
            if slot == ring.t_slot:
                # o gerador guardado é q^{1/2}
                value = _exact_sqrt(value)
            f = ring.substitute(f, slot, value)
        return f

    def render(self, f: RatFunc) -> str:
        return f.ring.serialize(self.specialize(f))

    def matrix(
        self,
        title: str,
        rows: Sequence[WeylElt],
        cols: Sequence[WeylElt],
        entry: Callable[[WeylElt, WeylElt], RatFunc],
        ring_kind: RingKind,
    ) -> MatrixDto:
        """
        Args:
            title: Nome da matriz
            rows: Índices das linhas
            cols: Índices das colunas
            entry: Função (linha, coluna) ↦ elemento do anel
            ring_kind: Anel dos coeficientes, reportado no DTO

        Returns:
            MatrixDto: Entradas na forma canônica
        """
        entries = [[self.render(entry(r, c)) for c in cols] for r in rows]
        logger.debug(f"Matriz '{title}' montada com {len(rows)}x{len(cols)} entradas")
        return MatrixDto(
            title=title,
            ring=RingKind(ring_kind).value,
            rows=[str(r) for r in rows],
            cols=[str(c) for c in cols],
            entries=entries,
        )

    def sparse_matrix(
        self,
        title: str,
        elements: Sequence[WeylElt],
        rows: Mapping[WeylElt, Dict[WeylElt, object]],
        ring_kind: RingKind,
        zero: RatFunc,
    ) -> MatrixDto:
        """Matriz a partir de dicionários esparsos linha ↦ {coluna: valor}."""
        def entry(r: WeylElt, c: WeylElt) -> RatFunc:
            value = rows[r].get(c, zero)
            if isinstance(value, (int, Fraction)):
                return zero.ring.const(value)
            return value

        return self.matrix(title, elements, elements, entry, ring_kind)

    @staticmethod
    def checks(report: VerificationReport) -> List[CheckDto]:
        return [
            CheckDto(name=check.name, passed=check.passed, asserted=check.asserted, detail=check.detail)
            for check in report.checks
        ]

    def report(
        self,
        job: JobSpec,
        container,
        matrices: Sequence[MatrixDto] = (),
        tables: Sequence[TableDto] = (),
        verification: Optional[VerificationReport] = None,
    ) -> JobReportDto:
        checks = self.checks(verification) if verification is not None else []
        return JobReportDto(
            job=job,
            root_system=container.root_system.label,
            group_order=len(container.group),
            matrices=list(matrices),
            tables=list(tables),
            checks=checks,
            passed=verification.passed if verification is not None else True,
        )
