# Domain Repository Interfaces
from .artifact_repository import ArtifactRepository
from .stab_family_repository import StabFamilyRepository

__all__ = [
    "ArtifactRepository",
    "StabFamilyRepository",
]
