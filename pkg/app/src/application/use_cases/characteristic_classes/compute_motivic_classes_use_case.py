import logging

from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import JobReportDto
from src.application.services.job_parameters import JobParameters
from src.application.services.report_assembler import ReportAssembler
from src.domain.entities.verification_report import VerificationReport
from src.domain.exceptions import DomainError
from src.domain.services.csm_classes import CellKind

logger = logging.getLogger(__name__)


class ComputeMotivicClassesUseCase:
    """
    Caso de uso para as classes de Chern motívicas das células de Schubert.

    As duas construções (stab₊ com dualidade de Serre e stab₋ com a classe
    dualizante) precisam coincidir; divergência interrompe o job.
    """

    def __init__(self, container):
        self._container = container

    def execute(self, job: JobSpec) -> JobReportDto:
        """
        Args:
            job: Job com a família de células e a variável (q ou y)

        Returns:
            JobReportDto: Localizações de MC e, para X, a expansão em [𝒪_{X(u)}]

        Raises:
            ConsistencyError: Se as duas construções divergirem
            ValidationError: Se a troca para y encontrar potência semi-inteira de q
        """
        try:
            cell = JobParameters(self._container, job).cell()
            service = self._container.motivic
            group = self._container.group
            ring = service.ring
            logger.info(f"Calculando classes MC de {cell.value}(w)° para {self._container.root_system.label}")

            service.require_consistent()
            in_y = job.variable == "y"
            classes = {}
            for w in group.elements:
                mc = service.mc_class(cell, w)
                classes[w] = service.to_y(mc) if in_y else mc

            verification = VerificationReport("mc")
            verification.extend(service.additivity_report())
            assembler = ReportAssembler(job.substitutions)
            matrices = [
                assembler.matrix(
                    f"MC({cell.value}(w)°)", group.elements, group.elements,
                    lambda w, v: classes[w][v], ring.kind,
                )
            ]
            if cell == CellKind.X:
                verification.add("y=0", not service.y_zero_defects())
                expansions = {}
                for w in group.elements:
                    coefficients = service.mc_expand(w)
                    if in_y:
                        coefficients = {u: ring.to_y_variable(c) for u, c in coefficients.items()}
                    expansions[w] = coefficients
                matrices.append(
                    assembler.sparse_matrix("MC em [O_X(u)]", group.elements, expansions, ring.kind, ring.zero)
                )
            return assembler.report(job, self._container, matrices=matrices, verification=verification)

        except DomainError as e:
            logger.error(f"Erro ao calcular classes motívicas: {str(e)}")
            raise e
        except Exception as e:
            logger.error(f"Erro inesperado ao calcular classes motívicas: {str(e)}")
            raise
