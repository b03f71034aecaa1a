"""
Entidades StabParams e StabFamily - Domain Layer

Parâmetros (câmara, polarização, alcova) de uma base estável e a família
de classes localizadas resultante.

A câmara c denota c·𝔠₊; 𝔠₋ = w₀·𝔠₊.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from src.domain.entities.alcove import AlcoveSpec
from src.domain.entities.laurent_poly import CharacterRing, RatFunc
from src.domain.entities.loc_class import LocClass
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import UnsupportedPolarizationError


class Polarization(str, Enum):
    """Polarizações suportadas: T𝔅 e T*𝔅."""
    TANGENT = "tangent"
    COTANGENT = "cotangent"

    @classmethod
    def parse(cls, text: str) -> "Polarization":
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            raise UnsupportedPolarizationError(str(text))

    @property
    def opposite(self) -> "Polarization":
        return Polarization.COTANGENT if self == Polarization.TANGENT else Polarization.TANGENT


@dataclass(frozen=True)
class StabParams:
    """Tripla (câmara, polarização, alcova)."""

    chamber: WeylElt
    polarization: Polarization
    alcove: AlcoveSpec

    def __post_init__(self):
        if not isinstance(self.polarization, Polarization):
            object.__setattr__(self, "polarization", Polarization.parse(self.polarization))

    def chamber_label(self) -> str:
        return f"{self.chamber}+"

    def __str__(self) -> str:
        return f"({self.chamber_label()}, {self.polarization.value}, {self.alcove})"


@dataclass
class StabFamily:
    """
    Família {stab_w} indexada por W.

    Matrizes exportadas têm linhas w e colunas v com entrada stab_w|_v.
    """

    params: StabParams
    classes: Dict[WeylElt, LocClass]
    ring: CharacterRing = field(repr=False)
    label: Optional[str] = None

    def __getitem__(self, w: WeylElt) -> LocClass:
        return self.classes[w]

    @property
    def group(self):
        return self.params.chamber.group

    def entry(self, w: WeylElt, v: WeylElt) -> RatFunc:
        return self.classes[w][v]

    def matrix(self) -> List[List[RatFunc]]:
        elements = self.group.elements
        return [[self.classes[w][v] for v in elements] for w in elements]
