"""
Entidade WeylElt - Domain Layer

Elemento do grupo de Weyl guardado pela sua forma canônica: matriz de ação
sobre o reticulado de pesos, matriz de ação em coordenadas de raízes simples,
comprimento e a palavra reduzida lexicograficamente mínima.
"""

from dataclasses import dataclass, field
from typing import Any, Sequence, Tuple

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class WeylElt:
    """
    Elemento de W.

    Igualdade e hash pela palavra canônica (0-indexada). A serialização usa
    índices 1-indexados: "s1.s2.s1", com a identidade como "e".
    """

    word: Tuple[int, ...]
    matrix: Matrix
    root_matrix: Matrix
    group: Any = field(default=None, repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def act_on_root(self, vector: Sequence) -> tuple:
        """Aplica w a um vetor em coordenadas de raízes simples."""
        return tuple(
            sum(row[j] * vector[j] for j in range(len(vector)))
            for row in self.root_matrix
        )

    def act_on_weight(self, vector: Sequence) -> tuple:
        """Aplica w a um vetor em coordenadas de pesos fundamentais."""
        return tuple(
            sum(row[j] * vector[j] for j in range(len(vector)))
            for row in self.matrix
        )

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Ordem comprimento-depois-lexicográfica das palavras canônicas."""
        return (self.length, self.word)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __lt__(self, other: "WeylElt") -> bool:
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.group.multiply(self, other)

    def __str__(self) -> str:
        if not self.word:
            return "e"
        return ".".join(f"s{i + 1}" for i in self.word)

    def __repr__(self) -> str:
        return f"WeylElt({self})"
