from abc import ABC, abstractmethod
from typing import List


class ArtifactRepository(ABC):
    """
    Interface para gravação dos artefatos de um job.

    Aplicando o princípio Dependency Inversion Principle (DIP) -
    o controller depende desta abstração, não do sistema de arquivos.
    """

    @abstractmethod
    def save(self, name: str, content: str) -> str:
        """
        Grava um artefato textual.

        Args:
            name: Nome do artefato, com extensão
            content: Conteúdo já formatado

        Returns:
            str: Localização do artefato gravado
        """
        pass

    @abstractmethod
    def load(self, name: str) -> str:
        """
        Lê um artefato gravado.

        Raises:
            NotFoundError: Se o artefato não existir
        """
        pass

    @abstractmethod
    def list_names(self) -> List[str]:
        """Nomes dos artefatos gravados, em ordem alfabética."""
        pass
