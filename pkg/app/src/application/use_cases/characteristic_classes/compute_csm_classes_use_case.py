import logging

from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import JobReportDto, TableDto
from src.application.services.job_parameters import JobParameters
from src.application.services.report_assembler import ReportAssembler
from src.domain.entities.verification_report import VerificationReport
from src.domain.exceptions import DomainError

logger = logging.getLogger(__name__)


class ComputeCSMClassesUseCase:
    """
    Caso de uso para as classes CSM das células de Schubert.

    Células X(w)° saem de stab₊ e células Y(w)° de stab₋, com ħ = 1.
    """

    def __init__(self, container):
        self._container = container

    def execute(self, job: JobSpec) -> JobReportDto:
        """
        Args:
            job: Job com a família de células (X ou Y)

        Returns:
            JobReportDto: Localizações, expansões equivariante e não equivariante

        Raises:
            ConsistencyError: Se alguma expansão não for polinomial
        """
        try:
            cell = JobParameters(self._container, job).cell()
            service = self._container.csm
            group = self._container.group
            ring = service.ring
            logger.info(f"Calculando classes CSM de {cell.value}(w)° para {self._container.root_system.label}")

            classes = {w: service.csm_class(cell, w) for w in group.elements}
            expansions = {w: service.csm_expand(cell, w) for w in group.elements}
            constants = {w: service.csm_expand_nonequivariant(cell, w) for w in group.elements}

            verification = VerificationReport("csm")
            for w in group.elements:
                values = constants[w].values()
                verification.add(
                    f"nao-equivariante[{w}]", all(c >= 0 and c.denominator == 1 for c in values)
                )
                verification.add(f"diagonal[{w}]", constants[w].get(w) == 1)
                verification.add(
                    f"equivariante[{w}]",
                    all(service.has_nonnegative_monomials(c) for c in expansions[w].values()),
                    asserted=False,
                )
            verification.add("aditividade", not service.additivity_defects()[cell.value])

            assembler = ReportAssembler(job.substitutions)
            matrices = [
                assembler.matrix(
                    f"csm({cell.value}(w)°)", group.elements, group.elements,
                    lambda w, v: classes[w][v], ring.kind,
                ),
                assembler.sparse_matrix(f"c({cell.value})", group.elements, expansions, ring.kind, ring.zero),
                assembler.sparse_matrix(f"c({cell.value}) não equivariante", group.elements, constants, ring.kind, ring.zero),
            ]
            signs = service.characteristic_cycle_signs()
            table = TableDto(
                title="sinais do ciclo característico",
                headers=["w", "sinal"],
                rows=[[str(w), "+" if signs[w] > 0 else "-"] for w in group.elements],
            )
            return assembler.report(job, self._container, matrices=matrices, tables=[table], verification=verification)

        except DomainError as e:
            logger.error(f"Erro ao calcular classes CSM: {str(e)}")
            raise e
        except Exception as e:
            logger.error(f"Erro inesperado ao calcular classes CSM: {str(e)}")
            raise
