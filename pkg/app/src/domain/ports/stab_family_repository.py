from abc import ABC, abstractmethod
from typing import List, Optional

from src.domain.entities.stab_family import StabFamily, StabParams


class StabFamilyRepository(ABC):
    """
    Interface para o cache de famílias de bases estáveis.

    Aplicando o princípio Dependency Inversion Principle (DIP) -
    os serviços de domínio dependem desta abstração, não do armazenamento.
    """

    @abstractmethod
    def save(self, family: StabFamily) -> StabFamily:
        """
        Guarda uma família indexada pelos seus parâmetros.

        Args:
            family: Família calculada

        Returns:
            StabFamily: A família guardada
        """
        pass

    @abstractmethod
    def find_by_params(self, params: StabParams) -> Optional[StabFamily]:
        """
        Busca uma família pelos parâmetros (câmara, polarização, alcova).

        Args:
            params: Parâmetros da família

        Returns:
            Optional[StabFamily]: Família encontrada ou None
        """
        pass

    @abstractmethod
    def find_all(self) -> List[StabFamily]:
        """Lista as famílias guardadas, na ordem de inserção."""
        pass

    @abstractmethod
    def clear(self) -> None:
        """Remove todas as famílias."""
        pass
