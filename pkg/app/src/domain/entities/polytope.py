"""
Entidade Polytope - Domain Layer

Politopo convexo guardado pela lista ordenada de vértices racionais exatos
(coordenadas de raízes simples).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Polytope:
    """Politopo dado por seus vértices (sem pontos redundantes)."""

    vertices: Tuple[Point, ...]

    @property
    def dimension_of_ambient(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0

    def translate(self, shift) -> "Polytope":
        return Polytope(tuple(sorted(
            tuple(a + Fraction(b) for a, b in zip(vertex, shift)) for vertex in self.vertices
        )))

    def __str__(self) -> str:
        return "conv{" + "; ".join("(" + ",".join(str(c) for c in v) + ")" for v in self.vertices) + "}"
