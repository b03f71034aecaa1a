"""
Gateways de persistência - Adapter Layer

Os gateways implementam as interfaces de repositório definidas no domínio.

Aplicando o padrão Gateway e o princípio Dependency Inversion Principle (DIP).
"""

from .file_artifact_gateway import FileArtifactGateway

__all__ = [
    "FileArtifactGateway",
]
