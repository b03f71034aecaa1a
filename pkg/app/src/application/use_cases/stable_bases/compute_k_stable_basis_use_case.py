import logging

from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import JobReportDto
from src.application.services.job_parameters import JobParameters
from src.application.services.report_assembler import ReportAssembler
from src.domain.exceptions import DomainError

logger = logging.getLogger(__name__)


class ComputeKStableBasisUseCase:
    """
    Caso de uso para calcular a base estável em K-teoria.

    Aplicando o princípio Single Responsibility Principle (SRP) -
    responsável apenas por montar a família stab^{𝔠,T^{1/2},∇} pedida.
    """

    def __init__(self, container):
        self._container = container

    def execute(self, job: JobSpec) -> JobReportDto:
        """
        Calcula a família e verifica seus axiomas.

        Args:
            job: Job com câmara, polarização e alcova

        Returns:
            JobReportDto: Matriz stab_w|_v (linhas w, colunas v) e verificações

        Raises:
            ValidationError: Se os parâmetros não forem interpretáveis
        """
        try:
            parameters = JobParameters(self._container, job)
            params = parameters.params()
            logger.info(f"Calculando base estável {params} para {self._container.root_system.label}")

            family = self._container.families.stab_general(params)
            axioms = self._container.axioms.verify_axioms(family)

            assembler = ReportAssembler(job.substitutions)
            elements = self._container.group.elements
            matrix = assembler.matrix(
                f"stab{params}", elements, elements, family.entry, family.ring.kind
            )
            return assembler.report(job, self._container, matrices=[matrix], verification=axioms)

        except DomainError as e:
            logger.error(f"Erro ao calcular base estável: {str(e)}")
            raise e
        except Exception as e:
            logger.error(f"Erro inesperado ao calcular base estável: {str(e)}")
            raise
