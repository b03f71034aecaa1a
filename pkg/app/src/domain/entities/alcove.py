"""
Entidade AlcoveSpec - Domain Layer

Alcova x∇₊ + μ do arranjo afim de hiperplanos H_{α^∨,n} (sem deslocamento por ρ),
codificada pelo par finito (x ∈ W, μ no reticulado de raízes).
"""

from dataclasses import dataclass
from typing import Tuple

from src.domain.entities.weyl_element import WeylElt


@dataclass(frozen=True)
class AlcoveSpec:
    """
    Alcova x∇₊ + μ.

    μ é guardado em coordenadas de raízes simples (inteiras).
    Forma textual: "x;μ", por exemplo "s1.s2;1,0" ou "e;0".
    """

    x: WeylElt
    mu: Tuple[int, ...]

    def __post_init__(self):
        if len(self.mu) != self.x.group.rank:
            raise ValueError("μ deve ter uma coordenada por raiz simples")

    @property
    def is_finite(self) -> bool:
        """Alcova sem translação (μ = 0)."""
        return not any(self.mu)

    def __str__(self) -> str:
        return f"{self.x};{','.join(str(c) for c in self.mu)}"
