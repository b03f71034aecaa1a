"""
Entidade TransitionMatrix - Domain Layer

Matriz m_{u,w} entre a base padrão e a base de Casselman dos invariantes
de Iwahori, com o caráter não ramificado mantido simbólico.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from src.domain.entities.laurent_poly import CharacterRing, RatFunc
from src.domain.entities.weyl_element import WeylElt
from src.domain.entities.weyl_group import WeylGroup


@dataclass
class TransitionMatrix:
    """Entradas m_{u,w}; pares ausentes são zero."""

    group: WeylGroup
    ring: CharacterRing = field(repr=False)
    entries: Dict[Tuple[WeylElt, WeylElt], RatFunc] = field(default_factory=dict)

    def __getitem__(self, pair: Tuple[WeylElt, WeylElt]) -> RatFunc:
        return self.entries.get(pair, self.ring.zero)

    def matrix(self) -> List[List[RatFunc]]:
        """Linhas u, colunas w, na ordem de W."""
        elements = self.group.elements
        return [[self[(u, w)] for w in elements] for u in elements]

    def is_unit_diagonal(self) -> bool:
        return all(self[(w, w)] == self.ring.one for w in self.group.elements)

    def support(self) -> List[Tuple[WeylElt, WeylElt]]:
        return [pair for pair, value in self.entries.items() if not value.is_zero()]
