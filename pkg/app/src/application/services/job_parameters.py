"""
Interpretação dos parâmetros textuais de um job.

Aplicando princípios SOLID:
- SRP: Responsável apenas por traduzir texto em objetos de domínio
- DIP: Usa o grupo e os serviços do contêiner recebido
"""

import logging
from typing import List, Tuple

from src.application.dtos.job_dto import JobSpec
from src.domain.entities.alcove import AlcoveSpec
from src.domain.entities.stab_family import Polarization, StabParams
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import ValidationError
from src.domain.services.csm_classes import CellKind
from src.domain.services.hecke_algebra import Sign

logger = logging.getLogger(__name__)


class JobParameters:
    """Parâmetros de um JobSpec já interpretados sobre um grupo de Weyl."""

    def __init__(self, container, job: JobSpec):
        self.container = container
        self.job = job
        self.group = container.group

    def chamber(self) -> WeylElt:
        """
        "w+" ↦ w (câmara w·𝔠₊); "w-" ↦ w·w₀, pois 𝔠₋ = w₀·𝔠₊.

        Raises:
            ParseError: Se a palavra não for válida
        """
        text = self.job.chamber
        w = self.group.parse(text[:-1])
        if text.endswith("-"):
            return self.group.multiply(w, self.group.longest)
        return w

    def sign(self) -> Sign:
        """
        Sinal da câmara para as tarefas restritas a 𝔠±.

        Raises:
            ValidationError: Para câmaras diferentes de 𝔠₊ e 𝔠₋
        """
        chamber = self.chamber()
        if chamber == self.group.identity:
            return Sign.PLUS
        if chamber == self.group.longest:
            return Sign.MINUS
        raise ValidationError(
            f"A tarefa {self.job.task.value} aceita apenas as câmaras e+ e e-", field="chamber"
        )

    def polarization(self) -> Polarization:
        return Polarization.parse(self.job.polarization)

    def alcove(self) -> AlcoveSpec:
        return self.container.alcoves.parse(self.job.alcove)

    def target(self) -> AlcoveSpec:
        if self.job.target is None:
            raise ValidationError("Informe a alcova de destino", field="target")
        return self.container.alcoves.parse(self.job.target)

    def params(self) -> StabParams:
        return StabParams(self.chamber(), self.polarization(), self.alcove())

    def cell(self) -> CellKind:
        return CellKind.parse(self.job.cell)

    def pairs(self) -> List[Tuple[WeylElt, WeylElt]]:
        pairs = []
        for text in self.job.pairs:
            u, w = text.split(":")
            pairs.append((self.group.parse(u), self.group.parse(w)))
        return pairs
