"""
Serviço de polinômios de raízes - Domain Layer

Trabalha em Q̂_W = Q^y ⊗ Q^x_W (anel duplicado: caracteres x em a1..ar,
caracteres y em b1..br). Para uma palavra reduzida w = s_{i1}···s_{il}:

    β_j = s_{i1}···s_{i(j-1)} α_{ij}
    h_i(β) = τ^x_i - (q-1)/y_{-β},   y_λ = 1 - e^{-λ}
    R±_w = h_{i1}(β_1)···h_{il}(β_l) = Σ_{v≤w} K_{v,w} τ±^x_v

A avaliação ev: y_λ ↦ x_λ identifica os caracteres y com os caracteres x.
A fórmula de restrição

    stab⁻_w|_v = c_w ∏_{α>0, v^{-1}α<0}(1 - e^α) ∏_{α>0, v^{-1}α>0}(1 - qe^{-α}) ev(K_{w,v})

é um algoritmo independente da recursão de Hecke. O prefator c_w impresso é
q^{-ℓ(w₀w)}; a normalização stab⁻_w|_w decide o valor usado (q^{ℓ(w)/2}).

Aplicando princípios SOLID:
- SRP: Responsável apenas pelos polinômios de raízes e suas expansões
- DIP: Depende de HeckeAlgebra (sobre o anel duplicado) e KStableBasisService
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.domain.entities.laurent_poly import CharacterRing, RatFunc, RingKind
from src.domain.entities.loc_class import LocClass
from src.domain.entities.qw_element import QHatWElt, QWElt
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import ConsistencyError, ValidationError
from src.domain.services.hecke_algebra import HeckeAlgebra, Sign
from src.domain.services.k_stable_basis import KStableBasisService

logger = logging.getLogger(__name__)


class RootPolynomialService:
    """Polinômios de raízes R±_w, coeficientes K e b±, e a fórmula de restrição."""

    def __init__(self, hecke: HeckeAlgebra, stable_basis: KStableBasisService):
        if hecke.ring.kind != RingKind.DOUBLED:
            raise ValidationError("Polinômios de raízes exigem o anel duplicado", field="ring")
        self.hecke = hecke
        self.ring: CharacterRing = hecke.ring
        self.group = hecke.group
        self.stable_basis = stable_basis
        self.k_ring: CharacterRing = stable_basis.ring
        self._tau: Dict[Tuple[Sign, WeylElt], QWElt] = {}
        self._kcoeffs: Dict[Tuple[Sign, WeylElt, Tuple[int, ...]], Dict[WeylElt, RatFunc]] = {}
        self._corrected = set()

    # ------------------------------------------------------------------
    # Construção de R±_w
    # ------------------------------------------------------------------
    def betas(self, word: Sequence[int]) -> List[Tuple[int, ...]]:
        """β_j = s_{i1}···s_{i(j-1)} α_{ij}."""
        rs = self.group.root_system
        prefix = self.group.identity
        result = []
        for i in word:
            result.append(tuple(prefix.act_on_root(rs.simple_root(i))))
            prefix = self.group.times_simple(prefix, i)
        return result

    def y_variable(self, mu: Sequence[int]) -> RatFunc:
        """y_μ = 1 - e^{-μ} nos caracteres y."""
        return 1 - 1 / self.ring.dual_character(mu)

    def h_factor(self, sign: Sign, i: int, beta: Sequence[int]) -> QHatWElt:
        """h_i(β) = τ±^x_i - (q-1)/y_{-β}."""
        tau = self.hecke.dl_element(sign, i)
        shift = (self.ring.q - 1) / self.y_variable(tuple(-c for c in beta))
        coeffs = {w: c for w, c in tau.items()}
        coeffs[self.group.identity] = tau.coefficient(self.group.identity) - shift
        return QHatWElt(self.group, self.ring, coeffs)

    def root_polynomial(self, sign: Sign, w: WeylElt, word: Optional[Sequence[int]] = None) -> QHatWElt:
        """
        R±_w para uma palavra reduzida de w (por padrão a canônica).

        Raises:
            NonReducedWordError: Se a palavra não for reduzida para w
        """
        word = self.hecke.word_for(w, word)
        result = QHatWElt(self.group, self.ring, {self.group.identity: self.ring.one})
        for i, beta in zip(word, self.betas(word)):
            result = result * self.h_factor(sign, i, beta)
        return result

    def _tau_word(self, sign: Sign, v: WeylElt) -> QWElt:
        key = (Sign(sign), v)
        if key not in self._tau:
            self._tau[key] = self.hecke.dl_word(sign, v)
        return self._tau[key]

    # ------------------------------------------------------------------
    # Mudanças de base δ ↔ τ
    # ------------------------------------------------------------------
    def expand_in_tau(self, sign: Sign, z: QWElt) -> Dict[WeylElt, RatFunc]:
        """
        Coeficientes c_v com z = Σ c_v τ±^x_v, por eliminação em comprimento decrescente.

        Raises:
            ConsistencyError: Se sobrar resíduo
        """
        residual = QWElt(self.group, self.ring, dict(z.items()))
        coefficients: Dict[WeylElt, RatFunc] = {}
        for v in reversed(self.group.elements):
            value = residual.coefficient(v)
            if value.is_zero():
                continue
            tau_v = self._tau_word(sign, v)
            c = value / tau_v.coefficient(v)
            coefficients[v] = c
            residual = residual - tau_v.left_scale(c)
        if not residual.is_zero():
            raise ConsistencyError("Resíduo na expansão na base τ", rule="tau-expansion")
        return coefficients

    def kcoeffs(self, sign: Sign, w: WeylElt, word: Optional[Sequence[int]] = None) -> Dict[WeylElt, RatFunc]:
        """K^{τ±}_{v,w} para v ≤ w."""
        key = (Sign(sign), w, tuple(self.hecke.word_for(w, word)))
        if key not in self._kcoeffs:
            self._kcoeffs[key] = self.expand_in_tau(sign, self.root_polynomial(sign, w, word))
        return self._kcoeffs[key]

    def b_coefficients(self, sign: Sign, w: WeylElt) -> Dict[WeylElt, RatFunc]:
        """b±_{w,v} com δ_w = Σ_{v≤w} b±_{w,v} τ±_v."""
        return self.expand_in_tau(sign, QWElt.delta(self.group, self.ring, w))

    def is_y_only(self, f: RatFunc) -> bool:
        """Grau zero nos caracteres x."""
        slots = self.ring.char_slots
        zero = tuple(0 for _ in slots)
        return all(
            tuple(m[k] for k in slots) == zero
            for poly in (f.frac.numer, f.frac.denom)
            for m in poly.keys()
        )

    # ------------------------------------------------------------------
    # Avaliação
    # ------------------------------------------------------------------
    def ev(self, f: RatFunc) -> RatFunc:
        """ev: e^λ_y ↦ e^λ_x (q fixo)."""
        rank = self.group.rank

        def collapse(monom):
            x, y, rest = monom[:rank], monom[rank:2 * rank], monom[2 * rank:]
            return tuple(a + b for a, b in zip(x, y)) + tuple(0 for _ in range(rank)) + tuple(rest), 1

        return self.ring.map_monomials(f, collapse)

    def ev_element(self, z: QWElt) -> QWElt:
        return QWElt(self.group, self.ring, {w: self.ev(c) for w, c in z.items()})

    def to_k_theory(self, f: RatFunc) -> RatFunc:
        """Leva um elemento sem caracteres y ao anel de K-teoria."""
        rank = self.group.rank
        k_ring = self.k_ring

        def move(monom):
            if any(monom[rank:2 * rank]):
                raise ValidationError("Elemento ainda contém caracteres y", field="f")
            key = [0] * k_ring.ngens
            for k in range(rank):
                key[k] = monom[k]
            key[k_ring.t_slot] = monom[2 * rank]
            return tuple(key), 1

        return self.ring.map_monomials(f, move, target=k_ring)

    def ev_prefactor(self, sign: Sign, w: WeylElt) -> RatFunc:
        """∏_{α>0, w^{-1}α<0} (q-e^α)/(1-e^{-α}) para + e (1-qe^{-α})/(1-e^α) para -."""
        ring = self.ring
        total = ring.one
        for alpha in self.group.left_inversions(w):
            e_alpha = ring.character(alpha)
            if Sign(sign) == Sign.PLUS:
                total = total * (ring.q - e_alpha) / (1 - 1 / e_alpha)
            else:
                total = total * (1 - ring.q / e_alpha) / (1 - e_alpha)
        return total

    def ev_check(self, sign: Sign, w: WeylElt) -> bool:
        """ev(R±_w) = (∏ ...) δ^x_w."""
        evaluated = self.ev_element(self.root_polynomial(sign, w))
        expected = QWElt(self.group, self.ring, {w: self.ev_prefactor(sign, w)})
        return evaluated == expected

    def kb_relation_holds(self, sign: Sign, w: WeylElt) -> bool:
        """ev(K_{v,w}) = ev(∏ ...) · b±_{w,v} para todo v ≤ w."""
        kcoeffs = self.kcoeffs(sign, w)
        bcoeffs = self.b_coefficients(sign, w)
        prefactor = self.ev_prefactor(sign, w)
        support = set(kcoeffs) | set(bcoeffs)
        return all(
            self.ev(kcoeffs.get(v, self.ring.zero)) == prefactor * bcoeffs.get(v, self.ring.zero)
            for v in support
        )

    # ------------------------------------------------------------------
    # Fórmula de restrição
    # ------------------------------------------------------------------
    def restriction_factor(self, v: WeylElt) -> RatFunc:
        """∏_{α>0, v^{-1}α<0}(1 - e^α) ∏_{α>0, v^{-1}α>0}(1 - qe^{-α}) no anel de K-teoria."""
        ring = self.k_ring
        inversions = set(self.group.left_inversions(v))
        total = ring.one
        for alpha in self.group.root_system.positive_roots:
            e_alpha = ring.character(alpha)
            total = total * ((1 - e_alpha) if alpha in inversions else (1 - ring.q / e_alpha))
        return total

    def raw_restrictions(self, w: WeylElt, sign: Sign = Sign.MINUS) -> LocClass:
        """Σ_{v≥w} ∏(...) ev(K_{w,v}) f_v, sem prefator em q."""
        values = {}
        for v in self.stable_basis.bruhat.above(w):
            k = self.kcoeffs(sign, v).get(w)
            if k is None or k.is_zero():
                continue
            values[v] = self.restriction_factor(v) * self.to_k_theory(self.ev(k))
        return LocClass(self.group, self.k_ring, values)

    def verbatim_prefactor(self, w: WeylElt) -> RatFunc:
        """q^{-ℓ(w₀w)}."""
        complement = self.group.multiply(self.group.longest, w)
        return self.k_ring.q_power(-2 * complement.length)

    def stab_minus_via_rootpoly(self, w: WeylElt, sign: Sign = Sign.MINUS) -> LocClass:
        """
        stab⁻_w pela fórmula de restrição.

        O prefator impresso é aplicado e depois corrigido pela normalização
        stab⁻_w|_w; a correção (uma potência constante de q) é registrada.

        Raises:
            ConsistencyError: Se a correção não for uma potência de q
        """
        verbatim = self.raw_restrictions(w, sign).scale(self.verbatim_prefactor(w))
        expected = self.stable_basis.minus_diagonal(w)
        correction = expected / verbatim[w]
        if not self._is_q_power(correction):
            raise ConsistencyError(
                f"Correção de normalização inesperada para {w}: {correction}", rule="rootpoly-normalization"
            )
        if correction != self.k_ring.one and w not in self._corrected:
            self._corrected.add(w)
            level = logging.WARNING if len(self._corrected) == 1 else logging.DEBUG
            logger.log(level, f"Prefator de stab⁻_{w} corrigido por {correction} para cumprir a normalização")
        return verbatim.scale(correction)

    def _is_q_power(self, f: RatFunc) -> bool:
        if not f.is_polynomial():
            return False
        terms = f.to_laurent().terms
        if len(terms) != 1:
            return False
        monom, coeff = terms[0]
        t_slot = self.k_ring.t_slot
        return coeff == 1 and not any(e for k, e in enumerate(monom) if k != t_slot)

    def restriction_defects(self, sign: Sign = Sign.MINUS) -> List[WeylElt]:
        """w com stab_minus_via_rootpoly(w) ≠ stab⁻_w pela recursão de Hecke."""
        family = self.stable_basis.stab_minus()
        return [w for w in self.group.elements if self.stab_minus_via_rootpoly(w, sign) != family[w]]
