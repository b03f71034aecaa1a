"""
Serviço de alcovas - Domain Layer

Decomposição de pontos racionais em alcovas, baricentros, negação de alcovas
e adjacência através de hiperplanos H_{β^∨,0}.

Aplicando princípios SOLID:
- SRP: Responsável apenas pela contabilidade de alcovas
- DIP: Depende das abstrações WeylGroup e RootSystem
"""

import logging
import math
import re
from fractions import Fraction
from typing import Sequence, Tuple

from src.domain.entities.alcove import AlcoveSpec
from src.domain.entities.root_system import RootVector
from src.domain.entities.weyl_element import WeylElt
from src.domain.entities.weyl_group import WeylGroup
from src.domain.exceptions import NotAdjacentAlcovesError, ParseError, WallPointError

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, ...]


class AlcoveService:
    """
    Operações sobre alcovas de um sistema de raízes fixo.

    Pontos são dados em coordenadas de pesos fundamentais.
    """

    def __init__(self, group: WeylGroup):
        self.group = group
        self.root_system = group.root_system

    def fundamental(self) -> AlcoveSpec:
        return AlcoveSpec(self.group.identity, self._zero())

    def antifundamental(self) -> AlcoveSpec:
        """∇₋ = w₀∇₊."""
        return AlcoveSpec(self.group.longest, self._zero())

    def _zero(self) -> Tuple[int, ...]:
        return tuple(0 for _ in range(self.group.rank))

    def _check_off_walls(self, point: Sequence[Fraction]) -> None:
        rs = self.root_system
        for root in rs.positive_roots:
            if rs.pairing(point, rs.coroots[root]).denominator == 1:
                raise WallPointError(tuple(str(c) for c in point))

    def decompose_alcove(self, point: Sequence) -> AlcoveSpec:
        """
        Encontra o único (x, μ) com point ∈ x∇₊ + μ.

        Reflete o ponto para ∇₊ usando s_i quando ⟨p, α_i^∨⟩ < 0 e a reflexão
        afim s_0 (λ ↦ s_φλ + φ) quando ⟨p, φ^∨⟩ > 1, acumulando a transformação
        afim p ↦ g·p + b. Então x = g^{-1} e μ = -g^{-1}b.

        Args:
            point: Vetor racional em coordenadas de pesos

        Returns:
            AlcoveSpec: A alcova que contém o ponto

        Raises:
            WallPointError: Se o ponto estiver sobre alguma parede
        """
        rs = self.root_system
        current = tuple(Fraction(c) for c in point)
        self._check_off_walls(current)
        phi = rs.highest_coroot_root
        phi_weight = rs.to_weight_coords(phi)
        phi_coroot = rs.coroots[phi]
        s_phi = self.group.reflection(phi)

        g = self.group.identity
        shift = tuple(Fraction(0) for _ in range(rs.rank))
        while True:
            negative = next((i for i in range(rs.rank) if current[i] < 0), None)
            if negative is not None:
                s_i = self.group.simple(negative)
                current = s_i.act_on_weight(current)
                shift = s_i.act_on_weight(shift)
                g = self.group.multiply(s_i, g)
                continue
            if rs.pairing(current, phi_coroot) > 1:
                current = tuple(a + b for a, b in zip(s_phi.act_on_weight(current), phi_weight))
                shift = tuple(a + b for a, b in zip(s_phi.act_on_weight(shift), phi_weight))
                g = self.group.multiply(s_phi, g)
                continue
            break

        x = self.group.inverse(g)
        mu_weight = tuple(-c for c in x.act_on_weight(shift))
        mu = rs.to_root_coords(mu_weight)
        if any(c.denominator != 1 for c in mu):
            raise ValueError("Translação fora do reticulado de raízes")
        return AlcoveSpec(x, tuple(int(c) for c in mu))

    def barycenter(self, alcove: AlcoveSpec) -> Point:
        """
        Baricentro de x∇₊ + μ em coordenadas de pesos.

        O baricentro de ∇₊ é (1/(r+1)) Σ ω_i/m_i, com m_i os coeficientes da corraiz máxima.
        """
        rs = self.root_system
        m = rs.highest_coroot_coefficients
        base = tuple(Fraction(1, (rs.rank + 1) * m[i]) for i in range(rs.rank))
        moved = alcove.x.act_on_weight(base)
        mu_weight = rs.to_weight_coords(alcove.mu)
        return tuple(a + b for a, b in zip(moved, mu_weight))

    def barycenter_root_coords(self, alcove: AlcoveSpec) -> Tuple[Fraction, ...]:
        return self.root_system.to_root_coords(self.barycenter(alcove))

    def negate(self, alcove: AlcoveSpec) -> AlcoveSpec:
        """-(x∇₊ + μ) = xw₀∇₊ - μ."""
        return AlcoveSpec(self.group.multiply(alcove.x, self.group.longest), tuple(-c for c in alcove.mu))

    def reflect(self, alcove: AlcoveSpec, root: RootVector) -> AlcoveSpec:
        """Imagem s_β(x∇₊ + μ) = s_βx∇₊ + s_βμ."""
        s_beta = self.group.reflection(root)
        return AlcoveSpec(self.group.multiply(s_beta, alcove.x), tuple(s_beta.act_on_root(alcove.mu)))

    def separating_hyperplanes(self, p: Sequence[Fraction], p2: Sequence[Fraction]) -> int:
        rs = self.root_system
        total = 0
        for root in rs.positive_roots:
            coroot = rs.coroots[root]
            total += abs(math.floor(rs.pairing(p, coroot)) - math.floor(rs.pairing(p2, coroot)))
        return total

    def pairing_sign(self, alcove: AlcoveSpec, root: RootVector) -> int:
        """Sinal de ⟨λ, β^∨⟩ no interior da alcova."""
        value = self.root_system.pairing(self.barycenter(alcove), self.root_system.coroots[tuple(root)])
        return 1 if value > 0 else -1

    def shared_zero_wall(self, first: AlcoveSpec, second: AlcoveSpec) -> RootVector:
        """
        Raiz positiva β tal que as alcovas compartilham uma parede em H_{β^∨,0}.

        Raises:
            NotAdjacentAlcovesError: Se não houver tal parede
        """
        for root in self.root_system.positive_roots:
            if self.reflect(first, root) == second:
                if self.separating_hyperplanes(self.barycenter(first), self.barycenter(second)) == 1:
                    return root
        raise NotAdjacentAlcovesError(
            f"As alcovas {first} e {second} não compartilham uma parede em um hiperplano por zero"
        )

    def zero_walls(self, alcove: AlcoveSpec):
        """Raízes positivas β com uma parede de H_{β^∨,0} na alcova."""
        walls = []
        for root in self.root_system.positive_roots:
            neighbour = self.reflect(alcove, root)
            if self.separating_hyperplanes(self.barycenter(alcove), self.barycenter(neighbour)) == 1:
                walls.append(root)
        return walls

    def parse(self, text: str) -> AlcoveSpec:
        """
        Interpreta a forma "x;μ" (μ em coordenadas inteiras de raízes simples; "0" é o vetor nulo).

        Raises:
            ParseError: Se o texto não seguir a gramática
        """
        if ";" not in text:
            raise ParseError(text, "alcova 'x;μ'")
        word, mu_text = text.split(";", 1)
        x = self.group.parse(word)
        mu_text = mu_text.strip()
        if not re.fullmatch(r"-?\d+(\s*,\s*-?\d+)*", mu_text):
            raise ParseError(text, "alcova 'x;μ'")
        mu = tuple(int(c) for c in mu_text.split(","))
        if mu == (0,):
            mu = self._zero()
        if len(mu) != self.group.rank:
            raise ParseError(text, "alcova 'x;μ'")
        return AlcoveSpec(x, mu)

    def contains(self, alcove: AlcoveSpec, point: Sequence) -> bool:
        return self.decompose_alcove(point) == alcove

    def describe(self, alcove: AlcoveSpec) -> str:
        return str(alcove)

    def weyl_image(self, w: WeylElt, alcove: AlcoveSpec) -> AlcoveSpec:
        """w(x∇₊ + μ) = wx∇₊ + wμ."""
        return AlcoveSpec(self.group.multiply(w, alcove.x), tuple(w.act_on_root(alcove.mu)))
