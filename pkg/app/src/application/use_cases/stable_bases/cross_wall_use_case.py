import logging

from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import JobReportDto, TableDto
from src.application.services.job_parameters import JobParameters
from src.application.services.report_assembler import ReportAssembler
from src.application.services.verification_suite import same_family
from src.domain.entities.verification_report import VerificationReport
from src.domain.exceptions import DomainError

logger = logging.getLogger(__name__)


class CrossWallUseCase:
    """
    Caso de uso para atravessar uma parede de alcova.

    Sem alcova de destino, atravessa cada parede que contém a origem e
    lista as alcovas vizinhas; com destino, devolve a família cruzada.
    """

    def __init__(self, container):
        self._container = container

    def execute(self, job: JobSpec) -> JobReportDto:
        """
        Args:
            job: Job com câmara, polarização, alcova e, opcionalmente, destino

        Returns:
            JobReportDto: Família cruzada e comparação com o cálculo direto

        Raises:
            NotAdjacentAlcovesError: Se o destino não for vizinho da origem
        """
        try:
            parameters = JobParameters(self._container, job)
            params = parameters.params()
            families, alcoves = self._container.families, self._container.alcoves
            family = families.stab_general(params)
            assembler = ReportAssembler(job.substitutions)
            verification = VerificationReport("wall")

            if job.target is None:
                rows = []
                for root in alcoves.zero_walls(params.alcove):
                    crossed = families.wall_cross(family, root)
                    ok = same_family(crossed, families.stab_general(crossed.params))
                    verification.add(f"cruzamento[{root}]", ok)
                    rows.append([",".join(str(c) for c in root), str(crossed.params.alcove)])
                table = TableDto(title=f"paredes de {params.alcove}", headers=["raiz", "alcova vizinha"], rows=rows)
                return assembler.report(job, self._container, tables=[table], verification=verification)

            target = parameters.target()
            logger.info(f"Atravessando de {params.alcove} para {target}")
            crossed = families.wall_cross_to(family, target)
            verification.add("cruzamento", same_family(crossed, families.stab_general(crossed.params)))
            elements = self._container.group.elements
            matrix = assembler.matrix(f"stab{crossed.params}", elements, elements, crossed.entry, crossed.ring.kind)
            return assembler.report(job, self._container, matrices=[matrix], verification=verification)

        except DomainError as e:
            logger.error(f"Erro ao atravessar parede: {str(e)}")
            raise e
        except Exception as e:
            logger.error(f"Erro inesperado ao atravessar parede: {str(e)}")
            raise
