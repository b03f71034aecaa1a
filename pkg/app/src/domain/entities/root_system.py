"""
Entidade RootSystem - Domain Layer

Dado de raízes finito: matriz de Cartan, raízes positivas, corraízes,
raízes simples e pesos fundamentais.

Convenções:
- A[i][j] = ⟨α_j, α_i^∨⟩ (numeração de Bourbaki).
- Raízes são guardadas em coordenadas de raízes simples (vetores inteiros).
- Pesos são guardados em coordenadas de pesos fundamentais (racionais exatos).
- Corraízes são guardadas em coordenadas de corraízes simples.

Aplicando princípios SOLID:
- SRP: Responsável apenas por representar o dado de raízes
- OCP: Novos tipos entram pelo builder sem alterar a entidade
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence, Tuple

import sympy

RootVector = Tuple[int, ...]
WeightVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RootSystem:
    """
    Sistema de raízes finito e simples.

    Imutável após a construção; seguro para leituras concorrentes.
    """

    type_label: str
    rank: int
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[RootVector, ...]
    coroots: Dict[RootVector, RootVector] = field(compare=False, hash=False, repr=False)
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...] = field(compare=False, hash=False, repr=False)

    @classmethod
    def from_cartan_matrix(
        cls,
        type_label: str,
        cartan_matrix: Sequence[Sequence[int]],
        positive_roots: Sequence[RootVector],
        coroots: Dict[RootVector, RootVector],
    ) -> "RootSystem":
        """
        Monta a entidade a partir dos dados já enumerados.

        Args:
            type_label: Letra do tipo (A-G)
            cartan_matrix: Matriz de Cartan
            positive_roots: Raízes positivas em coordenadas de raízes simples
            coroots: Corraiz de cada raiz positiva

        Returns:
            RootSystem: Sistema de raízes imutável
        """
        matrix = tuple(tuple(int(x) for x in row) for row in cartan_matrix)
        inverse = sympy.Matrix(matrix).inv()
        rank = len(matrix)
        cartan_inverse = tuple(
            tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(rank))
            for i in range(rank)
        )
        return cls(
            type_label=type_label,
            rank=rank,
            cartan_matrix=matrix,
            positive_roots=tuple(positive_roots),
            coroots=dict(coroots),
            cartan_inverse=cartan_inverse,
        )

    @property
    def label(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def simple_roots(self) -> Tuple[WeightVector, ...]:
        """Raízes simples em coordenadas de pesos fundamentais (colunas da matriz de Cartan)."""
        return tuple(
            tuple(Fraction(self.cartan_matrix[k][j]) for k in range(self.rank))
            for j in range(self.rank)
        )

    @property
    def fundamental_weights(self) -> Tuple[WeightVector, ...]:
        return tuple(
            tuple(Fraction(1 if k == i else 0) for k in range(self.rank))
            for i in range(self.rank)
        )

    @property
    def rho(self) -> WeightVector:
        """ρ em coordenadas de pesos fundamentais."""
        return tuple(Fraction(1) for _ in range(self.rank))

    @property
    def rho_root_coords(self) -> Tuple[Fraction, ...]:
        """ρ como metade da soma das raízes positivas, em coordenadas de raízes simples."""
        total = [Fraction(0)] * self.rank
        for root in self.positive_roots:
            for i, c in enumerate(root):
                total[i] += c
        return tuple(c / 2 for c in total)

    @property
    def is_simply_laced(self) -> bool:
        return self.type_label in ("A", "D", "E")

    def simple_root(self, i: int) -> RootVector:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def coroot(self, root: RootVector) -> RootVector:
        """Corraiz de uma raiz (positiva ou negativa)."""
        if root in self.coroots:
            return self.coroots[root]
        return tuple(-d for d in self.coroots[tuple(-c for c in root)])

    def to_weight_coords(self, root_vector: Sequence) -> WeightVector:
        """Converte coordenadas de raízes simples em coordenadas de pesos fundamentais."""
        return tuple(
            sum((Fraction(self.cartan_matrix[i][j]) * root_vector[j] for j in range(self.rank)), Fraction(0))
            for i in range(self.rank)
        )

    def to_root_coords(self, weight: Sequence) -> Tuple[Fraction, ...]:
        """Converte coordenadas de pesos fundamentais em coordenadas de raízes simples."""
        return tuple(
            sum((self.cartan_inverse[i][j] * Fraction(weight[j]) for j in range(self.rank)), Fraction(0))
            for i in range(self.rank)
        )

    def pairing(self, weight: Sequence, coroot: RootVector) -> Fraction:
        """⟨λ, β^∨⟩ para λ em coordenadas de pesos e β^∨ em coordenadas de corraízes simples."""
        return sum((Fraction(weight[j]) * coroot[j] for j in range(self.rank)), Fraction(0))

    def root_pairing(self, root_vector: Sequence, coroot: RootVector) -> Fraction:
        """⟨μ, β^∨⟩ para μ em coordenadas de raízes simples."""
        return self.pairing(self.to_weight_coords(root_vector), coroot)

    def is_positive(self, root_vector: Sequence) -> bool:
        return all(c >= 0 for c in root_vector) and any(c > 0 for c in root_vector)

    @property
    def highest_coroot_root(self) -> RootVector:
        """Raiz positiva φ cuja corraiz é a corraiz máxima (maior altura)."""
        return max(self.positive_roots, key=lambda root: (sum(self.coroots[root]), self.coroots[root]))

    @property
    def highest_coroot_coefficients(self) -> RootVector:
        return self.coroots[self.highest_coroot_root]
