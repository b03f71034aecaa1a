"""
Serviço de bases estáveis em cohomologia - Domain Layer

stab₋ pela fórmula de subpalavras: para uma palavra reduzida σ_1···σ_l de y,

    stab₋(w)|_y = (-1)^{ℓ(y)} ∏_{α∈R⁺∖R(y)}(α - ħ) · Σ ħ^{l-k} β_{i_1}···β_{i_k}

somando sobre todas as subpalavras σ_{i_1}···σ_{i_k} com produto w, onde
β_i = σ_1···σ_{i-1}α_{σ_i} e R(y) = {β_i}. stab₊ vem da dualidade
⟨stab₊(v), stab₋(w)⟩ = (-1)^{dim 𝔅} δ_{v,w}.

Também fornece as classes de Schubert pela fórmula AJS/Billey e o limite
ħ → ∞ que as liga a stab₋.

Aplicando princípios SOLID:
- SRP: Responsável pelas famílias cohomológicas e classes de Schubert
- DIP: Depende de BruhatOrder e GradedHeckeOperators injetados
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.domain.entities.laurent_poly import CharacterRing, LaurentPoly, RatFunc, RingKind
from src.domain.entities.loc_class import LocClass
from src.domain.entities.root_system import RootVector
from src.domain.entities.weyl_element import WeylElt
from src.domain.entities.weyl_group import WeylGroup
from src.domain.exceptions import NonReducedWordError, ValidationError
from src.domain.services.bruhat_order import BruhatOrder
from src.domain.services.graded_hecke import GradedHeckeOperators
from src.domain.services.hecke_algebra import Sign
from src.domain.services.triangular_solver import expand_in_triangular_basis

logger = logging.getLogger(__name__)


class CohomologicalStableBasisService:
    """
    Famílias stab± em H_T(T*𝔅) localizada e classes de Schubert [X(w)], [Y(w)].
    """

    def __init__(self, group: WeylGroup, ring: CharacterRing, bruhat: BruhatOrder, graded: GradedHeckeOperators):
        if ring.kind != RingKind.COHOMOLOGY:
            raise ValidationError("O serviço cohomológico exige o anel de cohomologia", field="ring")
        self.group = group
        self.ring = ring
        self.bruhat = bruhat
        self.graded = graded
        self.dimension = group.longest.length
        self._euler: Dict[WeylElt, RatFunc] = {}
        self._minus: Optional[Dict[WeylElt, LocClass]] = None
        self._plus: Optional[Dict[WeylElt, LocClass]] = None
        self._schubert_y: Dict[WeylElt, LocClass] = {}

    # ------------------------------------------------------------------
    # Palavras e raízes
    # ------------------------------------------------------------------
    def _word(self, y: WeylElt, word: Optional[Sequence[int]]) -> Tuple[int, ...]:
        if word is None:
            return y.word
        word = tuple(word)
        if len(word) != y.length or self.group.from_word(word) != y:
            raise NonReducedWordError(word)
        return word

    def betas(self, word: Sequence[int]) -> List[RootVector]:
        """β_i = σ_1···σ_{i-1} α_{σ_i}."""
        rs = self.group.root_system
        prefix = self.group.identity
        result = []
        for i in word:
            result.append(tuple(prefix.act_on_root(rs.simple_root(i))))
            prefix = self.group.times_simple(prefix, i)
        return result

    def _root(self, root: Sequence) -> RatFunc:
        return self.ring.linear_form(root)

    # ------------------------------------------------------------------
    # stab₋
    # ------------------------------------------------------------------
    def restriction_minus(self, w: WeylElt, y: WeylElt, word: Optional[Sequence[int]] = None) -> RatFunc:
        """
        stab₋(w)|_y pela fórmula de subpalavras, com a palavra reduzida dada para y.

        Args:
            w: Índice da classe
            y: Ponto fixo
            word: Palavra reduzida de y (por padrão a lexicograficamente mínima)

        Returns:
            RatFunc: A restrição; zero quando w ≰ y

        Raises:
            NonReducedWordError: Se word não for palavra reduzida de y
        """
        word = self._word(y, word)
        ring, group = self.ring, self.group
        hbar = ring.hbar
        betas = self.betas(word)

        # somas parciais indexadas pelo produto da subpalavra já escolhida
        partial: Dict[WeylElt, RatFunc] = {group.identity: ring.one}
        for letter, beta in zip(word, betas):
            step: Dict[WeylElt, RatFunc] = {}
            beta_form = self._root(beta)
            for product, value in partial.items():
                step[product] = step.get(product, ring.zero) + value * hbar
                taken = group.times_simple(product, letter)
                step[taken] = step.get(taken, ring.zero) + value * beta_form
            partial = step
        subword_sum = partial.get(w, ring.zero)
        if subword_sum.is_zero():
            return ring.zero

        inverted = set(betas)
        prefactor = ring.one if y.length % 2 == 0 else -ring.one
        for root in group.root_system.positive_roots:
            if tuple(root) not in inverted:
                prefactor = prefactor * (self._root(root) - hbar)
        return prefactor * subword_sum

    def stab_minus_coh(self, w: WeylElt, words: Optional[Dict[WeylElt, Sequence[int]]] = None) -> LocClass:
        """
        Classe stab₋(w); words fixa a palavra reduzida usada para cada y.
        """
        if words is None and self._minus is not None:
            return self._minus[w]
        words = words or {}
        values = {y: self.restriction_minus(w, y, words.get(y)) for y in self.bruhat.above(w)}
        return LocClass(self.group, self.ring, values)

    def stab_minus_family(self) -> Dict[WeylElt, LocClass]:
        if self._minus is None:
            self._minus = {w: self.stab_minus_coh(w) for w in self.group.elements}
            logger.debug(f"stab₋ cohomológica calculada para {self.group.root_system.label}")
        return self._minus

    def minus_diagonal(self, w: WeylElt) -> RatFunc:
        """stab₋(w)|_w = (-1)^{ℓ(w)} ∏_{α∈R⁺∖R(w)}(α - ħ) ∏_{β∈R(w)} β."""
        inverted = {tuple(root) for root in self.group.left_inversions(w)}
        total = self.ring.one if w.length % 2 == 0 else -self.ring.one
        for root in self.group.root_system.positive_roots:
            form = self._root(root)
            total = total * (form if tuple(root) in inverted else form - self.ring.hbar)
        return total

    # ------------------------------------------------------------------
    # Emparelhamento e stab₊
    # ------------------------------------------------------------------
    def coh_euler(self, v: WeylElt) -> RatFunc:
        """e(T_v(T*𝔅)) = ∏_{α>0}(-vα)(vα - ħ)."""
        if v not in self._euler:
            total = self.ring.one
            for root in self.group.root_system.positive_roots:
                form = self._root(v.act_on_root(root))
                total = total * (-form) * (form - self.ring.hbar)
            self._euler[v] = total
        return self._euler[v]

    def pairing_coh(self, first: LocClass, second: LocClass) -> RatFunc:
        """Σ_v F|_v G|_v / e(T_v(T*𝔅))."""
        total = self.ring.zero
        for v in self.group.elements:
            a, b = first[v], second[v]
            if a.is_zero() or b.is_zero():
                continue
            total = total + a * b / self.coh_euler(v)
        return total

    def stab_plus_family(self) -> Dict[WeylElt, LocClass]:
        """
        stab₊ pela dualidade: expandindo f_u = Σ_x c_{u,x} stab₋(x),
        stab₊(x)|_u = (-1)^{dim 𝔅} e(T_u) c_{u,x}.
        """
        if self._plus is None:
            group, ring = self.group, self.ring
            minus = self.stab_minus_family()
            sign = 1 if self.dimension % 2 == 0 else -1
            values: Dict[WeylElt, Dict[WeylElt, RatFunc]] = {w: {} for w in group.elements}
            for u in group.elements:
                coefficients = expand_in_triangular_basis(
                    LocClass.fixed_point(group, ring, u), minus, group.elements, rule="coh-duality"
                )
                euler = self.coh_euler(u) * sign
                for x, c in coefficients.items():
                    values[x][u] = c * euler
            self._plus = {w: LocClass(group, ring, values[w]) for w in group.elements}
            logger.debug(f"stab₊ cohomológica calculada para {group.root_system.label}")
        return self._plus

    def stab_plus_coh(self, w: WeylElt) -> LocClass:
        return self.stab_plus_family()[w]

    def stab_coh(self, sign: Sign, w: WeylElt) -> LocClass:
        return self.stab_plus_coh(w) if Sign.parse(sign) == Sign.PLUS else self.stab_minus_coh(w)

    # ------------------------------------------------------------------
    # Classes de Schubert
    # ------------------------------------------------------------------
    def ajs_billey(self, w: WeylElt) -> LocClass:
        """
        [Y(w)] = [closure(B⁻wB/B)]: [Y(w)]|_y = Σ β_{i_1}···β_{i_k} sobre
        subpalavras reduzidas da palavra de y com produto w.
        """
        if w not in self._schubert_y:
            group = self.group
            values = {}
            for y in self.bruhat.above(w):
                betas = [self._root(beta) for beta in self.betas(y.word)]
                total = self.ring.zero
                for positions in group.reduced_subwords(y.word):
                    if len(positions) != w.length:
                        continue
                    if group.from_word([y.word[p] for p in positions]) != w:
                        continue
                    term = self.ring.one
                    for p in positions:
                        term = term * betas[p]
                    total = total + term
                values[y] = total
            self._schubert_y[w] = LocClass(group, self.ring, values)
        return self._schubert_y[w]

    def schubert_y(self, w: WeylElt) -> LocClass:
        return self.ajs_billey(w)

    def schubert_x(self, w: WeylElt) -> LocClass:
        """[X(w)] = w₀·[Y(w₀w)]."""
        longest = self.group.longest
        return self.ajs_billey(self.group.multiply(longest, w)).weyl_act(longest)

    def divided_difference(self, i: int, f: LocClass) -> LocClass:
        """(∂_i f)(v) = (f(vs_i) - f(v)) / vα_i."""
        simple = self.group.root_system.simple_root(i)
        return LocClass.from_function(
            self.group,
            self.ring,
            lambda v: (f[self.group.times_simple(v, i)] - f[v]) / self._root(v.act_on_root(simple)),
        )

    def schubert_x_by_divided_differences(self) -> Dict[WeylElt, LocClass]:
        """[X(ws_i)] = ∂_i[X(w)] para ws_i > w, a partir de [X(e)] = ∏_{α>0}(-α) em e."""
        group = self.group
        point = self.ring.one
        for root in group.root_system.positive_roots:
            point = point * (-self._root(root))
        classes = {group.identity: LocClass.fixed_point(group, self.ring, group.identity, point)}
        for w in group.elements[1:]:
            i = next(k for k in range(group.rank) if group.is_right_descent(w, k))
            classes[w] = self.divided_difference(i, classes[group.times_simple(w, i)])
        return classes

    # ------------------------------------------------------------------
    # Verificações
    # ------------------------------------------------------------------
    def hbar_degree(self, f: RatFunc) -> int:
        terms = LaurentPoly.from_ratfunc(f).terms
        return max((monom[self.ring.h_slot] for monom, _ in terms), default=0)

    def billey_limit_check(self, w: WeylElt) -> bool:
        """
        [Y(w)]|_y = (-1)^{ℓ(w)} lim_{ħ→∞} stab₋(w)|_y / (-ħ)^{dim Y(w)}, dim Y(w) = ℓ(w₀) - ℓ(w).
        """
        ring = self.ring
        degree = self.dimension - w.length
        stab = self.stab_minus_coh(w)
        schubert = self.ajs_billey(w)
        sign = 1 if (w.length + degree) % 2 == 0 else -1
        for y in self.group.elements:
            entry = stab[y]
            if not entry.is_zero() and self.hbar_degree(entry) > degree:
                logger.debug(f"Limite de Billey diverge em stab₋({w})|_{y}")
                return False
            leading = ring.slot_coefficient(entry, ring.h_slot, degree) if not entry.is_zero() else ring.zero
            if leading * sign != schubert[y]:
                logger.debug(f"Limite de Billey falhou em ({w}, {y})")
                return False
        return True

    def word_independence_defects(self) -> List[Tuple[WeylElt, WeylElt]]:
        """Pares (w, y) cuja restrição depende da palavra reduzida escolhida para y."""
        failures = []
        for y in self.group.elements:
            words = self.group.reduced_words(y)
            if len(words) < 2:
                continue
            for w in self.bruhat.below(y):
                reference = self.restriction_minus(w, y, words[0])
                if any(self.restriction_minus(w, y, word) != reference for word in words[1:]):
                    failures.append((w, y))
        return failures

    def duality_defects(self) -> List[Tuple[WeylElt, WeylElt]]:
        """Pares (v, w) com ⟨stab₊(v), stab₋(w)⟩ ≠ (-1)^{dim 𝔅} δ_{v,w}."""
        plus, minus = self.stab_plus_family(), self.stab_minus_family()
        sign = 1 if self.dimension % 2 == 0 else -1
        failures = []
        for v in self.group.elements:
            for w in self.group.elements:
                expected = self.ring.const(sign) if v == w else self.ring.zero
                if self.pairing_coh(plus[v], minus[w]) != expected:
                    failures.append((v, w))
        return failures

    def cohaction_defects(self) -> List[Tuple[str, WeylElt, int]]:
        """Triplas (sinal, w, i) com π(s_i) stab±(w) ≠ -stab±(ws_i)."""
        failures = []
        for sign, family in (("-", self.stab_minus_family()), ("+", self.stab_plus_family())):
            for w in self.group.elements:
                for i in range(self.group.rank):
                    moved = self.graded.coh_hecke_s(i, family[w])
                    if moved != -family[self.group.times_simple(w, i)]:
                        failures.append((sign, w, i))
        return failures

    def hbar_divisibility_defects(self) -> List[Tuple[str, WeylElt, WeylElt]]:
        """Entradas fora da diagonal que não são divisíveis por ħ."""
        failures = []
        for sign, family in (("-", self.stab_minus_family()), ("+", self.stab_plus_family())):
            for w, stab in family.items():
                for y in stab.support():
                    if y == w:
                        continue
                    if not self.ring.substitute(stab[y], self.ring.h_slot, 0).is_zero():
                        failures.append((sign, w, y))
        return failures

    def schubert_route_defects(self) -> List[WeylElt]:
        """w com w₀·[Y(w₀w)] diferente da recursão por diferenças divididas."""
        recursive = self.schubert_x_by_divided_differences()
        return [w for w in self.group.elements if self.schubert_x(w) != recursive[w]]
