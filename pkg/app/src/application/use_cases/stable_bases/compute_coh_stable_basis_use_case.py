import logging

from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import JobReportDto
from src.application.services.job_parameters import JobParameters
from src.application.services.report_assembler import ReportAssembler
from src.domain.entities.verification_report import VerificationReport
from src.domain.exceptions import DomainError
from src.domain.services.hecke_algebra import Sign

logger = logging.getLogger(__name__)


class ComputeCohStableBasisUseCase:
    """
    Caso de uso para a base estável em cohomologia equivariante.

    Só existem as câmaras 𝔠₊ (e+) e 𝔠₋ (e-); a matriz traz também as
    classes de Schubert [Y(w)] ou [X(w)] da mesma câmara.
    """

    def __init__(self, container):
        self._container = container

    def execute(self, job: JobSpec) -> JobReportDto:
        """
        Args:
            job: Job com câmara e+ ou e-

        Returns:
            JobReportDto: Matrizes stab±_w|_v e das classes de Schubert

        Raises:
            ValidationError: Para câmaras diferentes de e+ e e-
        """
        try:
            sign = JobParameters(self._container, job).sign()
            service = self._container.cohomology
            group = self._container.group
            logger.info(f"Calculando base estável cohomológica {sign.value} para {self._container.root_system.label}")

            classes = {w: service.stab_coh(sign, w) for w in group.elements}
            if sign == Sign.MINUS:
                schubert = {w: service.schubert_y(w) for w in group.elements}
                schubert_title = "[Y(w)]"
            else:
                schubert = {w: service.schubert_x(w) for w in group.elements}
                schubert_title = "[X(w)]"

            verification = VerificationReport(f"stab{sign.value}-coh")
            if sign == Sign.MINUS:
                for w in group.elements:
                    verification.add(f"diagonal[{w}]", classes[w][w] == service.minus_diagonal(w))
                    verification.add(f"limite-billey[{w}]", service.billey_limit_check(w))
            else:
                verification.add("dualidade", not service.duality_defects())

            assembler = ReportAssembler(job.substitutions)
            kind = service.ring.kind
            matrices = [
                assembler.matrix(f"stab{sign.value}", group.elements, group.elements, lambda w, v: classes[w][v], kind),
                assembler.matrix(schubert_title, group.elements, group.elements, lambda w, v: schubert[w][v], kind),
            ]
            return assembler.report(job, self._container, matrices=matrices, verification=verification)

        except DomainError as e:
            logger.error(f"Erro ao calcular base estável cohomológica: {str(e)}")
            raise e
        except Exception as e:
            logger.error(f"Erro inesperado ao calcular base estável cohomológica: {str(e)}")
            raise
