import logging
import os
from typing import List

from src.domain.exceptions import NotFoundError, ValidationError
from src.domain.ports.artifact_repository import ArtifactRepository

logger = logging.getLogger(__name__)


class FileArtifactGateway(ArtifactRepository):
    """
    Gateway de artefatos em arquivos de texto.

    Implementa a interface ArtifactRepository definida no domínio.
    Aplicando o princípio Single Responsibility Principle (SRP) -
    responsável apenas por gravar e ler artefatos num diretório.

    Os arquivos são gravados em UTF-8 com fim de linha "\\n", sem
    metadados, para que jobs idênticos produzam bytes idênticos.
    """

    def __init__(self, base_dir: str):
        self.base_dir = base_dir

    def _path(self, name: str) -> str:
        if not name or os.path.basename(name) != name:
            raise ValidationError(f"Nome de artefato inválido: {name}", field="name")
        return os.path.join(self.base_dir, name)

    def save(self, name: str, content: str) -> str:
        """
        Grava o artefato, substituindo uma versão anterior.

        Args:
            name: Nome do arquivo
            content: Conteúdo textual

        Returns:
            str: Caminho do arquivo gravado
        """
        path = self._path(name)
        os.makedirs(self.base_dir, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as buffer:
            buffer.write(content)
        logger.info(f"Artefato gravado em {path}")
        return path

    def load(self, name: str) -> str:
        path = self._path(name)
        if not os.path.exists(path):
            raise NotFoundError("Artefato", name)
        with open(path, "r", encoding="utf-8") as buffer:
            return buffer.read()

    def list_names(self) -> List[str]:
        if not os.path.isdir(self.base_dir):
            return []
        return sorted(
            entry for entry in os.listdir(self.base_dir)
            if os.path.isfile(os.path.join(self.base_dir, entry))
        )
