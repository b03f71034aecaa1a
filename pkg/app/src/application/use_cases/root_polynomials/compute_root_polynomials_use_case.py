import logging

from src.application.dtos.job_dto import JobSpec
from src.application.dtos.report_dto import JobReportDto
from src.application.services.job_parameters import JobParameters
from src.application.services.report_assembler import ReportAssembler
from src.application.services.verification_suite import VerificationSuite
from src.domain.entities.verification_report import VerificationReport
from src.domain.exceptions import DomainError
from src.domain.services.hecke_algebra import Sign

logger = logging.getLogger(__name__)


class ComputeRootPolynomialsUseCase:
    """
    Caso de uso para os coeficientes K±_{w,v} dos polinômios de raízes.

    Na câmara e- também devolve stab⁻ pela fórmula de restrição, comparada
    entrada a entrada com a recursão de Hecke.
    """

    def __init__(self, container):
        self._container = container

    def execute(self, job: JobSpec) -> JobReportDto:
        """
        Args:
            job: Job com câmara e+ ou e-

        Returns:
            JobReportDto: Matrizes K_{w,v}, b_{w,v} e, para e-, stab⁻ pela fórmula

        Raises:
            ConsistencyError: Se a correção de normalização não for potência de q
        """
        try:
            sign = JobParameters(self._container, job).sign()
            service = self._container.root_polynomials
            group = self._container.group
            label = self._container.root_system.label
            logger.info(f"Calculando polinômios de raízes {sign.value} para {label}")

            kcoeffs = {w: service.kcoeffs(sign, w) for w in group.elements}
            bcoeffs = {w: service.b_coefficients(sign, w) for w in group.elements}
            doubled = self._container.doubled_ring
            assembler = ReportAssembler(job.substitutions)
            matrices = [
                assembler.sparse_matrix(f"K{sign.value}", group.elements, kcoeffs, doubled.kind, doubled.zero),
                assembler.sparse_matrix(f"b{sign.value}", group.elements, bcoeffs, doubled.kind, doubled.zero),
            ]

            verification = VerificationReport("rootpoly")
            for w in group.elements:
                verification.add(f"ev[{w}]", service.ev_check(sign, w))
                verification.add(f"K-b[{w}]", service.kb_relation_holds(sign, w))

            if sign == Sign.MINUS:
                restrictions = {w: service.stab_minus_via_rootpoly(w) for w in group.elements}
                family = self._container.stable_basis.stab_minus()
                for w in group.elements:
                    verification.add(f"duas-rotas[{w}]", restrictions[w] == family[w])
                matrices.append(assembler.matrix(
                    "stab- (polinômios de raízes)",
                    group.elements,
                    group.elements,
                    lambda w, v: restrictions[w][v],
                    self._container.k_ring.kind,
                ))
                rs = self._container.root_system
                if rs.type_label == "A" and rs.rank == 2:
                    verification.add("valor-SL3", VerificationSuite(self._container).sl3_value_holds())

            return assembler.report(job, self._container, matrices=matrices, verification=verification)

        except DomainError as e:
            logger.error(f"Erro ao calcular polinômios de raízes: {str(e)}")
            raise e
        except Exception as e:
            logger.error(f"Erro inesperado ao calcular polinômios de raízes: {str(e)}")
            raise
