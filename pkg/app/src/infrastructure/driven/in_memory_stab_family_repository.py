"""
Implementação em memória do StabFamilyRepository - Infrastructure Layer

Guarda famílias já calculadas durante a vida do processo.

Aplicando princípios SOLID:
- SRP: Responsável apenas pelo armazenamento em memória das famílias
- LSP: Pode substituir qualquer implementação do repositório
- DIP: Implementa abstração definida no domínio
"""

import logging
from typing import Dict, List, Optional

from src.domain.entities.stab_family import StabFamily, StabParams
from src.domain.ports.stab_family_repository import StabFamilyRepository

logger = logging.getLogger(__name__)


class InMemoryStabFamilyRepository(StabFamilyRepository):
    """Cache de famílias indexado por StabParams."""

    def __init__(self):
        self._families: Dict[StabParams, StabFamily] = {}

    def save(self, family: StabFamily) -> StabFamily:
        self._families[family.params] = family
        logger.debug(f"Família guardada: {family.params}")
        return family

    def find_by_params(self, params: StabParams) -> Optional[StabFamily]:
        return self._families.get(params)

    def find_all(self) -> List[StabFamily]:
        return list(self._families.values())

    def clear(self) -> None:
        self._families.clear()
