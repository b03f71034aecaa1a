import logging

from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import JobReportDto, TableDto
from src.application.services.job_parameters import JobParameters
from src.application.services.report_assembler import ReportAssembler
from src.domain.entities.verification_report import VerificationReport
from src.domain.exceptions import DomainError

logger = logging.getLogger(__name__)


class ComputeTransitionMatrixUseCase:
    """
    Caso de uso para a matriz m_{u,w} entre as bases padrão e de Casselman.

    Também monta a tabela de fatoração, suavidade e analiticidade para os
    pares pedidos (todos os pares u ≤ w quando nenhum é informado).
    """

    def __init__(self, container):
        self._container = container

    def execute(self, job: JobSpec) -> JobReportDto:
        """
        Args:
            job: Job com pares opcionais "u:w"

        Returns:
            JobReportDto: Matriz m (linhas u, colunas w), tabela e verificações

        Raises:
            NotBruhatComparableError: Se algum par pedido tiver u ≰ w
        """
        try:
            service = self._container.padic
            group = self._container.group
            ring = service.ring
            logger.info(f"Calculando a matriz de transição para {self._container.root_system.label}")

            matrix = service.transition_matrix()
            pairs = JobParameters(self._container, job).pairs()
            verdicts = [service.bnn_tests(u, w) for u, w in pairs] if pairs else service.bnn_table()

            verification = VerificationReport("padic")
            verification.add("diagonal-unitaria", matrix.is_unit_diagonal())
            verification.add("gindikin-karpelevich", service.gk_check())
            simply_laced = group.root_system.is_simply_laced
            for verdict in verdicts:
                pair = f"({verdict.u},{verdict.w})"
                verification.add(
                    f"fatoracao<=>suavidade{pair}",
                    verdict.factorization == verdict.smooth,
                    detail=verdict.smoothness_label,
                    asserted=simply_laced,
                )
                verification.add(f"analiticidade{pair}", verdict.analytic)

            assembler = ReportAssembler(job.substitutions)
            matrix_dto = assembler.matrix(
                "m", group.elements, group.elements, lambda u, w: matrix[(u, w)], ring.kind
            )
            table = TableDto(
                title="fatoração e suavidade",
                headers=["u", "w", "fatora", verdicts[0].smoothness_label if verdicts else "smooth", "analítica"],
                rows=[
                    [str(v.u), str(v.w), _flag(v.factorization), _flag(v.smooth), _flag(v.analytic)]
                    for v in verdicts
                ],
            )
            return assembler.report(
                job, self._container, matrices=[matrix_dto], tables=[table], verification=verification
            )

        except DomainError as e:
            logger.error(f"Erro ao calcular a matriz de transição: {str(e)}")
            raise e
        except Exception as e:
            logger.error(f"Erro inesperado ao calcular a matriz de transição: {str(e)}")
            raise


def _flag(value: bool) -> str:
    return "sim" if value else "não"
