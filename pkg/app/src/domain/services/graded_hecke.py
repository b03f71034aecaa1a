"""
Operadores da álgebra de Hecke graduada - Domain Layer

Ação de π(s_i) e de x_λ (primeira classe de Chern) sobre classes de
cohomologia localizadas:

    (π(s_i)f)(v) = (ħ/(vα_i))·f(v) + ((vα_i - ħ)/(vα_i))·f(vs_i)
    (x_λ f)(v)   = (vλ)·f(v)
"""

import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.domain.entities.laurent_poly import CharacterRing, RatFunc
from src.domain.entities.loc_class import LocClass
from src.domain.entities.weyl_element import WeylElt
from src.domain.entities.weyl_group import WeylGroup

logger = logging.getLogger(__name__)


class GradedHeckeOperators:
    """Operadores π(s_i) e x_λ sobre o anel de cohomologia."""

    def __init__(self, group: WeylGroup, ring: CharacterRing):
        self.group = group
        self.ring = ring
        self._coefficients: Dict[Tuple[int, WeylElt], Tuple[RatFunc, RatFunc]] = {}

    def _coefficients_at(self, i: int, v: WeylElt) -> Tuple[RatFunc, RatFunc]:
        key = (i, v)
        if key not in self._coefficients:
            root = self.ring.linear_form(v.act_on_root(self.group.root_system.simple_root(i)))
            hbar = self.ring.hbar
            self._coefficients[key] = (hbar / root, (root - hbar) / root)
        return self._coefficients[key]

    def coh_hecke_s(self, i: int, f: LocClass) -> LocClass:
        values = {}
        for v in self.group.elements:
            c1, c2 = self._coefficients_at(i, v)
            values[v] = c1 * f[v] + c2 * f[self.group.times_simple(v, i)]
        return LocClass(self.group, self.ring, values)

    def coh_chern_mult(self, weight: Sequence, f: LocClass) -> LocClass:
        """
        Multiplica por x_λ, com λ em coordenadas de pesos fundamentais.
        """
        lam = self.group.root_system.to_root_coords([Fraction(c) for c in weight])
        return f.map(lambda v, value: value * self.ring.linear_form(v.act_on_root(lam)))

    def reflect_weight(self, i: int, weight: Sequence) -> Tuple[Fraction, ...]:
        """s_i λ em coordenadas de pesos."""
        return self.group.simple(i).act_on_weight([Fraction(c) for c in weight])

    def hecke_relation_defect(self, i: int, weight: Sequence, f: LocClass) -> LocClass:
        """
        s_i x_λ - x_{s_iλ} s_i - ħ⟨λ, α_i^∨⟩ aplicado a f; deve ser zero.
        """
        rs = self.group.root_system
        pairing = rs.pairing(weight, rs.coroots[rs.simple_root(i)])
        left = self.coh_hecke_s(i, self.coh_chern_mult(weight, f))
        right = self.coh_chern_mult(self.reflect_weight(i, weight), self.coh_hecke_s(i, f))
        return left - right - f.scale(self.ring.hbar * self.ring.const(pairing))

    def coh_word_action(self, word: Sequence[int], f: LocClass) -> LocClass:
        """π(s_{i1})···π(s_{ik}) f."""
        for i in reversed(tuple(word)):
            f = self.coh_hecke_s(i, f)
        return f

    def braid_defects(self, f: LocClass) -> List[Tuple[int, int]]:
        """Pares (i, j) em que π(s_i)π(s_j)··· ≠ π(s_j)π(s_i)··· (m_{ij} fatores) em f."""
        failures = []
        for i in range(self.group.rank):
            for j in range(i + 1, self.group.rank):
                m = self.group.braid_order(i, j)
                left = ([i, j] * m)[:m]
                right = ([j, i] * m)[:m]
                if self.coh_word_action(left, f) != self.coh_word_action(right, f):
                    failures.append((i, j))
        return failures

    def chern_commutation_defect(self, first: Sequence, second: Sequence, f: LocClass) -> LocClass:
        """x_λ x_μ f - x_μ x_λ f; deve ser zero."""
        return (
            self.coh_chern_mult(first, self.coh_chern_mult(second, f))
            - self.coh_chern_mult(second, self.coh_chern_mult(first, f))
        )
