"""
Serviço de bases estáveis em K-teoria - Domain Layer

Constrói as famílias canônicas stab⁻ = stab^{𝔠₋,T*𝔅,∇₊} e
stab⁺ = stab^{𝔠₊,T𝔅,∇₋} em K_T(T*𝔅) localizada e fornece o
emparelhamento por localização

    ⟨F, G⟩ = Σ_w F|_w G|_w / ∏_{α>0}(1 - e^{wα})(1 - qe^{-wα}).

stab⁻ vem da recursão de Hecke a partir de stab⁻_{w₀}; stab⁺ vem da
dualidade ⟨stab⁺_v, stab⁻_w⟩ = δ_{v,w} e é conferida contra
q^{-ℓ(w)/2} τ⁺_{w^{-1}} • (x_{-w₀} f_e).

Aplicando princípios SOLID:
- SRP: Responsável apenas pelas famílias canônicas e pelo emparelhamento
- DIP: Depende de HeckeAlgebra e BruhatOrder injetados
"""

import logging
from typing import Dict, List, Optional, Tuple

from src.domain.entities.alcove import AlcoveSpec
from src.domain.entities.laurent_poly import CharacterRing, RatFunc
from src.domain.entities.loc_class import LocClass
from src.domain.entities.stab_family import Polarization, StabFamily, StabParams
from src.domain.entities.weyl_element import WeylElt
from src.domain.entities.weyl_group import WeylGroup
from src.domain.exceptions import ConsistencyError
from src.domain.services.bruhat_order import BruhatOrder
from src.domain.services.hecke_algebra import HeckeAlgebra, Sign
from src.domain.services.triangular_solver import expand_in_triangular_basis

logger = logging.getLogger(__name__)


class KStableBasisService:
    """
    Famílias canônicas stab± e o emparelhamento de K-teoria.

    As famílias são calculadas uma única vez por instância.
    """

    def __init__(self, group: WeylGroup, ring: CharacterRing, hecke: HeckeAlgebra, bruhat: BruhatOrder):
        self.group = group
        self.ring = ring
        self.hecke = hecke
        self.bruhat = bruhat
        self._denominators: Dict[WeylElt, RatFunc] = {}
        self._minus: Optional[StabFamily] = None
        self._plus: Optional[StabFamily] = None

    # ------------------------------------------------------------------
    # Parâmetros canônicos
    # ------------------------------------------------------------------
    def _zero(self) -> Tuple[int, ...]:
        return tuple(0 for _ in range(self.group.rank))

    def minus_params(self) -> StabParams:
        """(𝔠₋, T*𝔅, ∇₊)."""
        return StabParams(self.group.longest, Polarization.COTANGENT, AlcoveSpec(self.group.identity, self._zero()))

    def plus_params(self) -> StabParams:
        """(𝔠₊, T𝔅, ∇₋)."""
        return StabParams(self.group.identity, Polarization.TANGENT, AlcoveSpec(self.group.longest, self._zero()))

    # ------------------------------------------------------------------
    # Fatores de localização
    # ------------------------------------------------------------------
    def _image_roots(self, v: WeylElt) -> List[Tuple[int, ...]]:
        return [tuple(v.act_on_root(root)) for root in self.group.root_system.positive_roots]

    def euler_denominator(self, v: WeylElt) -> RatFunc:
        """∏_{α>0}(1 - e^{vα})(1 - qe^{-vα})."""
        if v not in self._denominators:
            ring = self.ring
            total = ring.one
            for beta in self._image_roots(v):
                e_beta = ring.character(beta)
                total = total * (1 - e_beta) * (1 - ring.q / e_beta)
            self._denominators[v] = total
        return self._denominators[v]

    def pairing_k(self, first: LocClass, second: LocClass) -> RatFunc:
        total = self.ring.zero
        for v in self.group.elements:
            a, b = first[v], second[v]
            if a.is_zero() or b.is_zero():
                continue
            total = total + a * b / self.euler_denominator(v)
        return total

    def x_minus_w0(self) -> RatFunc:
        """x_{-w₀} = ∏_{α>0}(1 - e^{α})."""
        total = self.ring.one
        for root in self.group.root_system.positive_roots:
            total = total * (1 - self.ring.character(root))
        return total

    def minus_diagonal(self, w: WeylElt) -> RatFunc:
        """stab⁻_w|_w = q^{ℓ(w)/2} ∏_{wβ<0}(1 - e^{-wβ}) ∏_{wβ>0}(1 - qe^{-wβ})."""
        ring = self.ring
        total = ring.q_power(w.length)
        for beta in self._image_roots(w):
            inverse = 1 / ring.character(beta)
            if self.group.root_system.is_positive(beta):
                total = total * (1 - ring.q * inverse)
            else:
                total = total * (1 - inverse)
        return total

    def plus_diagonal(self, w: WeylElt) -> RatFunc:
        """stab⁺_w|_w = q^{-ℓ(w)/2} ∏_{wβ<0}(q - e^{wβ}) ∏_{wβ>0}(1 - e^{wβ})."""
        ring = self.ring
        total = ring.q_power(-w.length)
        for beta in self._image_roots(w):
            e_beta = ring.character(beta)
            if self.group.root_system.is_positive(beta):
                total = total * (1 - e_beta)
            else:
                total = total * (ring.q - e_beta)
        return total

    # ------------------------------------------------------------------
    # Famílias canônicas
    # ------------------------------------------------------------------
    def stab_minus(self) -> StabFamily:
        """
        stab⁻ pela recursão stab⁻_v = q^{-1/2}(T_i - (q-1)) stab⁻_{vs_i}, vs_i > v,
        a partir de stab⁻_{w₀}, cuja única restrição não nula é a normalização.
        """
        if self._minus is None:
            group, ring = self.group, self.ring
            longest = group.longest
            classes: Dict[WeylElt, LocClass] = {
                longest: LocClass.fixed_point(group, ring, longest, self.minus_diagonal(longest))
            }
            q_minus_half = ring.q_power(-1)
            for v in reversed(group.elements[:-1]):
                i = next(k for k in range(group.rank) if group.times_simple(v, k).length > v.length)
                parent = classes[group.times_simple(v, i)]
                raised = self.hecke.t_action(i, parent) - parent.scale(ring.q - 1)
                classes[v] = raised.scale(q_minus_half)
            self._minus = StabFamily(self.minus_params(), classes, ring, label="stab-")
            logger.debug(f"stab⁻ calculada para {group.root_system.label}")
        return self._minus

    def stab_minus_via_hecke_formula(self) -> Dict[WeylElt, LocClass]:
        """stab⁻_w = q^{ℓ(w₀)-ℓ(w)/2} (τ⁻_{w₀w})^{-1} • (x_{-w₀} f_{w₀})."""
        group, ring = self.group, self.ring
        longest = group.longest
        seed = LocClass.fixed_point(group, ring, longest, self.x_minus_w0())
        result = {}
        for w in group.elements:
            complement = group.multiply(longest, w)
            moved = self.hecke.word_action(Sign.MINUS, complement.word, seed, inverse=True)
            result[w] = moved.scale(ring.q_power(2 * longest.length - w.length))
        return result

    def stab_plus_via_hecke_formula(self) -> Dict[WeylElt, LocClass]:
        """stab⁺_w = q^{-ℓ(w)/2} τ⁺_{w^{-1}} • (x_{-w₀} f_e)."""
        group, ring = self.group, self.ring
        seed = LocClass.fixed_point(group, ring, group.identity, self.x_minus_w0())
        result = {}
        for w in group.elements:
            moved = self.hecke.word_action(Sign.PLUS, group.inverse(w).word, seed)
            result[w] = moved.scale(ring.q_power(-w.length))
        return result

    def stab_plus(self) -> StabFamily:
        """
        stab⁺ pela dualidade com stab⁻.

        Expandindo f_u = Σ_x c_{u,x} stab⁻_x obtém-se stab⁺_x|_u = c_{u,x}·D_u,
        com D_u o denominador de localização em u.

        Raises:
            ConsistencyError: Se divergir da fórmula τ⁺_{w^{-1}} • (x_{-w₀} f_e)
        """
        if self._plus is None:
            group, ring = self.group, self.ring
            minus = self.stab_minus()
            values: Dict[WeylElt, Dict[WeylElt, RatFunc]] = {w: {} for w in group.elements}
            for u in group.elements:
                target = LocClass.fixed_point(group, ring, u)
                coefficients = expand_in_triangular_basis(
                    target, minus.classes, group.elements, rule="stab-plus-duality"
                )
                denominator = self.euler_denominator(u)
                for x, c in coefficients.items():
                    values[x][u] = c * denominator
            classes = {w: LocClass(group, ring, values[w]) for w in group.elements}

            formula = self.stab_plus_via_hecke_formula()
            for w in group.elements:
                if classes[w] != formula[w]:
                    raise ConsistencyError(
                        f"stab⁺_{w} pela dualidade difere de τ⁺_{{w^-1}} • (x_{{-w0}} f_e)",
                        rule="stab-plus-two-routes",
                    )
            self._plus = StabFamily(self.plus_params(), classes, ring, label="stab+")
            logger.debug(f"stab⁺ calculada e conferida para {group.root_system.label}")
        return self._plus

    def stab_canonical(self, sign: Sign) -> StabFamily:
        return self.stab_plus() if Sign(sign) == Sign.PLUS else self.stab_minus()

    # ------------------------------------------------------------------
    # Verificações
    # ------------------------------------------------------------------
    def duality_defects(self) -> List[Tuple[WeylElt, WeylElt]]:
        """Pares (v, w) com ⟨stab⁺_v, stab⁻_w⟩ ≠ δ_{v,w}."""
        plus, minus = self.stab_plus(), self.stab_minus()
        failures = []
        for v in self.group.elements:
            for w in self.group.elements:
                expected = self.ring.one if v == w else self.ring.zero
                if self.pairing_k(plus[v], minus[w]) != expected:
                    failures.append((v, w))
        return failures

    def hecke_action_defects(self) -> List[Tuple[str, WeylElt, int]]:
        """
        Confere T_α(stab⁻_w) e T'_α(stab⁺_w) contra as fórmulas de dois ramos:
        (q-1)stab_w + q^{1/2}stab_{ws_α} se ws_α < w, q^{1/2}stab_{ws_α} caso contrário.
        """
        ring = self.ring
        q_half = ring.q_power(1)
        failures = []
        for sign, family, action in (
            ("-", self.stab_minus(), self.hecke.t_action),
            ("+", self.stab_plus(), self.hecke.tprime_action),
        ):
            for w in self.group.elements:
                for i in range(self.group.rank):
                    ws = self.group.times_simple(w, i)
                    expected = family[ws].scale(q_half)
                    if ws.length < w.length:
                        expected = expected + family[w].scale(ring.q - 1)
                    if action(i, family[w]) != expected:
                        failures.append((sign, w, i))
        return failures
