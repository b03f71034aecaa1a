"""
Serviço de álgebra de Hecke - Domain Layer

Elementos de Demazure-Lusztig τ±_i em Q_W, seus produtos e inversos, a
ação • sobre classes localizadas e os operadores T_α = τ⁻_i•, T'_α = τ⁺_i•.

(z • f)(v) = Σ_u v(c_u) f(vu) para z = Σ c_u δ_u. É uma ação à esquerda:
δ_w • (δ_v • f) = δ_{wv} • f.

Aplicando princípios SOLID:
- SRP: Responsável apenas pela álgebra de Hecke em K-teoria
- DIP: Depende das abstrações WeylGroup e CharacterRing
"""

import logging
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

from src.domain.entities.laurent_poly import CharacterRing, RatFunc
from src.domain.entities.loc_class import LocClass
from src.domain.entities.qw_element import QWElt
from src.domain.entities.weyl_element import WeylElt
from src.domain.entities.weyl_group import WeylGroup
from src.domain.exceptions import NonReducedWordError, ValidationError

logger = logging.getLogger(__name__)


class Sign(str, Enum):
    """Sinal dos elementos de Demazure-Lusztig."""
    PLUS = "+"
    MINUS = "-"

    @classmethod
    def parse(cls, text: str) -> "Sign":
        if isinstance(text, cls):
            return text
        normalized = {"+": "+", "plus": "+", "-": "-", "−": "-", "minus": "-"}.get(str(text).strip().lower())
        if normalized is None:
            raise ValidationError(f"Sinal inválido: {text}", field="sign")
        return cls(normalized)


class HeckeAlgebra:
    """
    Álgebra de Hecke realizada em Q_W e sua ação sobre K-classes localizadas.
    """

    def __init__(self, group: WeylGroup, ring: CharacterRing):
        self.group = group
        self.ring = ring
        self._twisted: Dict[Tuple[Sign, int, WeylElt], Tuple[RatFunc, RatFunc]] = {}

    # ------------------------------------------------------------------
    # Elementos de Q_W
    # ------------------------------------------------------------------
    def dl_coefficients(self, sign: Sign, i: int) -> Tuple[RatFunc, RatFunc]:
        """
        Coeficientes (c₁, c₂) de τ±_i = c₁ + c₂δ_{s_i}.

        τ⁺_i = (q-1)/(1-e^{α_i}) + (q-e^{α_i})/(1-e^{-α_i}) δ_{s_i}
        τ⁻_i = (q-1)/(1-e^{α_i}) + (1-qe^{-α_i})/(1-e^{α_i}) δ_{s_i}
        """
        ring = self.ring
        a = ring.character(self.group.root_system.simple_root(i))
        q = ring.q
        c1 = (q - 1) / (1 - a)
        if Sign(sign) == Sign.PLUS:
            c2 = (q - a) / (1 - 1 / a)
        else:
            c2 = (1 - q / a) / (1 - a)
        return c1, c2

    def dl_element(self, sign: Sign, i: int) -> QWElt:
        c1, c2 = self.dl_coefficients(sign, i)
        return QWElt(self.group, self.ring, {self.group.identity: c1, self.group.simple(i): c2})

    def generator_inverse(self, sign: Sign, i: int) -> QWElt:
        """(τ±_i)^{-1} = q^{-1}τ±_i + (q^{-1} - 1)."""
        q_inv = 1 / self.ring.q
        tau = self.dl_element(sign, i)
        return tau.left_scale(q_inv) + QWElt.scalar(self.group, self.ring, q_inv - 1)

    def word_for(self, w: WeylElt, word: Optional[Sequence[int]]) -> Tuple[int, ...]:
        if word is None:
            return w.word
        word = tuple(word)
        if self.group.from_word(word) != w or len(word) != w.length:
            raise NonReducedWordError(word)
        return word

    def dl_word(self, sign: Sign, w: WeylElt, word: Optional[Sequence[int]] = None) -> QWElt:
        """τ±_w = τ±_{i1}···τ±_{il} para uma palavra reduzida de w."""
        result = QWElt.delta(self.group, self.ring, self.group.identity)
        for i in self.word_for(w, word):
            result = result * self.dl_element(sign, i)
        return result

    def qw_invert(self, sign: Sign, w: WeylElt, word: Optional[Sequence[int]] = None) -> QWElt:
        """(τ±_w)^{-1} = (τ±_{il})^{-1}···(τ±_{i1})^{-1}."""
        result = QWElt.delta(self.group, self.ring, self.group.identity)
        for i in reversed(self.word_for(w, word)):
            result = result * self.generator_inverse(sign, i)
        return result

    @staticmethod
    def qw_mul(a: QWElt, b: QWElt) -> QWElt:
        return a * b

    # ------------------------------------------------------------------
    # Ação sobre classes localizadas
    # ------------------------------------------------------------------
    def bullet_action(self, z: QWElt, f: LocClass) -> LocClass:
        """(z • f)(v) = Σ_u v(c_u) f(vu)."""
        values = {}
        for v in self.group.elements:
            total = self.ring.zero
            for u, c in z.items():
                target = f[self.group.multiply(v, u)]
                if not target.is_zero():
                    total = total + self.ring.weyl_act(v, c) * target
            values[v] = total
        return LocClass(self.group, self.ring, values)

    def _twisted_coefficients(self, sign: Sign, i: int, v: WeylElt) -> Tuple[RatFunc, RatFunc]:
        key = (Sign(sign), i, v)
        if key not in self._twisted:
            c1, c2 = self.dl_coefficients(sign, i)
            self._twisted[key] = (self.ring.weyl_act(v, c1), self.ring.weyl_act(v, c2))
        return self._twisted[key]

    def _generator_action(self, sign: Sign, i: int, f: LocClass) -> LocClass:
        values = {}
        for v in self.group.elements:
            c1, c2 = self._twisted_coefficients(sign, i, v)
            here, there = f[v], f[self.group.times_simple(v, i)]
            total = self.ring.zero
            if not here.is_zero():
                total = total + c1 * here
            if not there.is_zero():
                total = total + c2 * there
            values[v] = total
        return LocClass(self.group, self.ring, values)

    def t_action(self, i: int, f: LocClass) -> LocClass:
        """T_{α_i} = τ⁻_i •."""
        return self._generator_action(Sign.MINUS, i, f)

    def tprime_action(self, i: int, f: LocClass) -> LocClass:
        """T'_{α_i} = τ⁺_i •."""
        return self._generator_action(Sign.PLUS, i, f)

    def _inverse_action(self, sign: Sign, i: int, f: LocClass) -> LocClass:
        q_inv = 1 / self.ring.q
        return self._generator_action(sign, i, f).scale(q_inv) + f.scale(q_inv - 1)

    def t_inverse_action(self, i: int, f: LocClass) -> LocClass:
        return self._inverse_action(Sign.MINUS, i, f)

    def tprime_inverse_action(self, i: int, f: LocClass) -> LocClass:
        return self._inverse_action(Sign.PLUS, i, f)

    def word_action(self, sign: Sign, word: Sequence[int], f: LocClass, inverse: bool = False) -> LocClass:
        """
        Aplica T_w = T_{i1}∘···∘T_{il} (ou (T_w)^{-1}) a f.

        Args:
            sign: MINUS para T, PLUS para T'
            word: Palavra (i1, ..., il)
            f: Classe localizada
            inverse: Se True aplica (T_w)^{-1} = T_{il}^{-1}∘···∘T_{i1}^{-1}
        """
        result = f
        if inverse:
            for i in word:
                result = self._inverse_action(sign, i, result)
        else:
            for i in reversed(word):
                result = self._generator_action(sign, i, result)
        return result

    def weyl_act_class(self, w: WeylElt, f: LocClass) -> LocClass:
        """(w·f)(v) = w(f(w^{-1}v))."""
        return f.weyl_act(w)

    def line_bundle(self, mu: Sequence[int], f: LocClass) -> LocClass:
        """Multiplicação por 𝓛_μ: f(v) ↦ e^{vμ} f(v)."""
        return f.map(lambda v, value: value * self.ring.character(v.act_on_root(mu)))
