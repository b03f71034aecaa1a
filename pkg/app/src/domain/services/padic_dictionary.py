"""
Serviço do dicionário K-teoria ↔ invariantes de Iwahori - Domain Layer

O isomorfismo de ℍ-módulos à direita leva (stab⁻_w)_{-ρ} a q^{-ℓ(w)/2}φ_w e a
classe de ponto fixo normalizada

    F_w = q^{ℓ(w)} / (∏_{wβ>0}(1 - e^{wβ}) ∏_{wβ<0}(q - e^{wβ})) · (ι_{w*}1)

a f_w. Daí Σ_{v≥u} φ_v = Σ_w m_{u,w} f_w dá a matriz de transição, lida das
restrições de stab⁻ e conferida emparelhando com stab⁺. A matriz é comparada
com as fórmulas de Gindikin-Karpelevich e de Bump-Nakasuji-Naruse.

Aplicando princípios SOLID:
- SRP: Responsável apenas pelo dicionário e seus testes
- DIP: Depende de KStableBasisService e BruhatOrder injetados
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.domain.entities.laurent_poly import RatFunc
from src.domain.entities.loc_class import LocClass
from src.domain.entities.root_system import RootVector
from src.domain.entities.transition_matrix import TransitionMatrix
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import NotBruhatComparableError
from src.domain.services.bruhat_order import BruhatOrder
from src.domain.services.k_stable_basis import KStableBasisService

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BnnVerdict:
    """Vereditos do teste de Bump-Nakasuji-Naruse para um par u ≤ w."""

    u: WeylElt
    w: WeylElt
    factorization: bool
    smooth: bool
    analytic: bool
    smoothness_label: str = "smooth"


class PAdicDictionaryService:
    """Matriz m_{u,w}, verificações GK e BNN e os extremos do dicionário."""

    def __init__(self, stable_basis: KStableBasisService, bruhat: BruhatOrder):
        self.stable_basis = stable_basis
        self.bruhat = bruhat
        self.group = stable_basis.group
        self.ring = stable_basis.ring
        self._raw: Optional[Dict[Tuple[WeylElt, WeylElt], RatFunc]] = None
        self._matrix: Optional[TransitionMatrix] = None

    # ------------------------------------------------------------------
    # Normalizações
    # ------------------------------------------------------------------
    def fixed_point_product(self, w: WeylElt) -> RatFunc:
        """∏_{wβ>0}(1 - e^{wβ}) ∏_{wβ<0}(q - e^{wβ})."""
        ring = self.ring
        total = ring.one
        for root in self.group.root_system.positive_roots:
            image = w.act_on_root(root)
            e_image = ring.character(image)
            if self.group.root_system.is_positive(image):
                total = total * (1 - e_image)
            else:
                total = total * (ring.q - e_image)
        return total

    def fixed_point_class(self, w: WeylElt) -> LocClass:
        """F_w, suportada apenas em w."""
        value = (
            self.ring.q_power(2 * w.length)
            * self.stable_basis.euler_denominator(w)
            / self.fixed_point_product(w)
        )
        return LocClass.fixed_point(self.group, self.ring, w, value)

    # ------------------------------------------------------------------
    # Matriz de transição
    # ------------------------------------------------------------------
    def _raw_entries(self) -> Dict[Tuple[WeylElt, WeylElt], RatFunc]:
        if self._raw is None:
            group, ring = self.group, self.ring
            minus = self.stable_basis.stab_minus()
            entries = {}
            for w in group.elements:
                norm = (
                    ring.q_power(-2 * w.length)
                    * self.fixed_point_product(w)
                    / self.stable_basis.euler_denominator(w)
                )
                for u in self.bruhat.below(w):
                    total = ring.zero
                    for v in self.bruhat.interval(u, w):
                        total = total + ring.q_power(v.length) * minus[v][w]
                    entries[(u, w)] = norm * total
            self._raw = entries
        return self._raw

    def transition_matrix(self) -> TransitionMatrix:
        """
        m_{u,w}, com caracteres invertidos (e^λ ↦ e^{-λ}) para lê-los como
        valores do caráter não ramificado.
        """
        if self._matrix is None:
            entries = {
                pair: self.ring.invert_characters(value) for pair, value in self._raw_entries().items()
            }
            self._matrix = TransitionMatrix(self.group, self.ring, entries)
            if not self._matrix.is_unit_diagonal():
                logger.warning("Diagonal de m_{w,w} diferente de 1")
            logger.debug(f"Matriz de transição calculada para {self.group.root_system.label}")
        return self._matrix

    # ------------------------------------------------------------------
    # Gindikin-Karpelevich e Bump-Nakasuji-Naruse
    # ------------------------------------------------------------------
    def _ratio(self, roots: List[RootVector]) -> RatFunc:
        ring = self.ring
        total = ring.one
        q_inverse = ring.q_power(-2)
        for root in roots:
            e_root = ring.character(root)
            total = total * (1 - q_inverse * e_root) / (1 - e_root)
        return total

    def gk_product(self, w: WeylElt) -> RatFunc:
        """∏_{α>0, w^{-1}α<0}(1 - q^{-1}e^α)/(1 - e^α)."""
        return self._ratio(self.group.left_inversions(w))

    def gk_defects(self) -> List[WeylElt]:
        m = self.transition_matrix()
        return [w for w in self.group.elements if m[(self.group.identity, w)] != self.gk_product(w)]

    def gk_check(self) -> bool:
        return not self.gk_defects()

    def bnn_roots(self, u: WeylElt, w: WeylElt) -> List[RootVector]:
        """{α > 0 : u ≤ s_α w < w}."""
        roots = []
        for root, reflection in self.group.reflections():
            moved = self.group.multiply(reflection, w)
            if self.bruhat.less(moved, w) and self.bruhat.leq(u, moved):
                roots.append(root)
        return roots

    def bnn_tests(self, u: WeylElt, w: WeylElt) -> BnnVerdict:
        """
        Args:
            u: Índice de Y(u)
            w: Ponto fixo e_w

        Returns:
            BnnVerdict: Fatoração, suavidade de Y(u) em e_w e analiticidade

        Raises:
            NotBruhatComparableError: Se u ≰ w
        """
        if not self.bruhat.leq(u, w):
            raise NotBruhatComparableError(str(u), str(w))
        roots = self.bnn_roots(u, w)
        entry = self.transition_matrix()[(u, w)]
        factorization = entry == self._ratio(roots)
        smooth = self.bruhat.rationally_smooth_at(u, w)

        cleared = entry
        for root in roots:
            cleared = cleared * (1 - self.ring.character(root))
        analytic = cleared.is_polynomial()

        label = "smooth" if self.group.root_system.is_simply_laced else "rationally smooth"
        return BnnVerdict(u, w, factorization, smooth, analytic, label)

    def bnn_table(self) -> List[BnnVerdict]:
        return [
            self.bnn_tests(u, w)
            for w in self.group.elements
            for u in self.bruhat.below(w)
        ]

    # ------------------------------------------------------------------
    # Verificações do dicionário
    # ------------------------------------------------------------------
    def dictionary_defects(self) -> List[Tuple[WeylElt, WeylElt]]:
        """
        Pares (u, x) com ⟨stab⁺_x, Σ_w m_{u,w} F_w⟩ ≠ q^{ℓ(x)/2}[u ≤ x].

        O lado direito é ⟨stab⁺_x, Σ_{v≥u} q^{ℓ(v)/2} stab⁻_v⟩ pela dualidade.
        As entradas m vêm das restrições de stab⁻; aqui entram stab⁺ e o
        emparelhamento. A torção por ρ multiplica as duas somas ponto a ponto e
        não muda os coeficientes.
        """
        raw = self._raw_entries()
        group, ring = self.group, self.ring
        plus = self.stable_basis.stab_plus()
        pairings = {
            (x, w): self.stable_basis.pairing_k(plus[x], self.fixed_point_class(w))
            for x in group.elements
            for w in group.elements
        }
        failures = []
        for u in group.elements:
            for x in group.elements:
                total = ring.zero
                for w in self.bruhat.above(u):
                    total = total + raw[(u, w)] * pairings[(x, w)]
                expected = ring.q_power(x.length) if self.bruhat.leq(u, x) else ring.zero
                if total != expected:
                    failures.append((u, x))
        if failures:
            logger.warning(f"Dicionário falhou em {len(failures)} pares")
        return failures


    def hecke_module_defects(self) -> List[Tuple[WeylElt, int]]:
        """
        T_i φ_w = φ_{ws_i} se ws_i > w, senão (q-1)φ_w + qφ_{ws_i}, com
        φ_w = q^{ℓ(w)/2} stab⁻_w.
        """
        ring, group = self.ring, self.group
        minus = self.stable_basis.stab_minus()
        hecke = self.stable_basis.hecke

        def phi(w: WeylElt) -> LocClass:
            return minus[w].scale(ring.q_power(w.length))

        failures = []
        for w in group.elements:
            for i in range(group.rank):
                ws = group.times_simple(w, i)
                if ws.length > w.length:
                    expected = phi(ws)
                else:
                    expected = phi(w).scale(ring.q - 1) + phi(ws).scale(ring.q)
                if hecke.t_action(i, phi(w)) != expected:
                    failures.append((w, i))
        return failures
