"""
Serviço de famílias gerais de bases estáveis - Domain Layer

stab^{c𝔠₊, T^{1/2}, x∇₊+μ} para qualquer câmara, polarização em {T𝔅, T*𝔅}
e alcova, composta a partir das famílias canônicas:

- parte finita da alcova pela compatibilidade entre paredes e Hecke:
      stab^{𝔠₋,T*𝔅,x∇₊}_y = q^{-ℓ(x)/2} T_x(stab⁻_{yx})
      stab^{𝔠₊,T𝔅,x∇₋}_y  = q^{ℓ(x)/2} (T'_{x^{-1}})^{-1}(stab⁺_{yx})
- translação por μ: stab^{∇+μ}_y = e^{-yμ} 𝓛_μ ⊗ stab^{∇}_y
- câmara pela ação de W à esquerda: w(stab^{𝔠,∇}_y) = stab^{w𝔠,∇}_{wy}

e o cruzamento de paredes em hiperplanos H_{α^∨,0}.

Aplicando princípios SOLID:
- SRP: Responsável pela composição de famílias e pelo cruzamento de paredes
- DIP: Depende do repositório abstrato de famílias
"""

import logging
from typing import Dict, Optional, Sequence

from src.domain.entities.alcove import AlcoveSpec
from src.domain.entities.loc_class import LocClass
from src.domain.entities.root_system import RootVector
from src.domain.entities.stab_family import Polarization, StabFamily, StabParams
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import NotAdjacentAlcovesError
from src.domain.ports.stab_family_repository import StabFamilyRepository
from src.domain.services.alcove_service import AlcoveService
from src.domain.services.bruhat_order import BruhatOrder
from src.domain.services.hecke_algebra import HeckeAlgebra, Sign
from src.domain.services.k_stable_basis import KStableBasisService

logger = logging.getLogger(__name__)


class StableFamilyService:
    """
    Famílias stab^{𝔠, T^{1/2}, ∇} e matrizes de cruzamento de paredes.
    """

    def __init__(
        self,
        stable_basis: KStableBasisService,
        hecke: HeckeAlgebra,
        bruhat: BruhatOrder,
        alcoves: AlcoveService,
        repository: Optional[StabFamilyRepository] = None,
    ):
        self.stable_basis = stable_basis
        self.hecke = hecke
        self.bruhat = bruhat
        self.alcoves = alcoves
        self.group = stable_basis.group
        self.ring = stable_basis.ring
        self.repository = repository

    # ------------------------------------------------------------------
    # Ordem da câmara
    # ------------------------------------------------------------------
    def chamber_leq(self, chamber: WeylElt, v: WeylElt, w: WeylElt) -> bool:
        """v ⪯_{c𝔠₊} w sse c^{-1}v ≤ c^{-1}w."""
        c_inv = self.group.inverse(chamber)
        return self.bruhat.leq(self.group.multiply(c_inv, v), self.group.multiply(c_inv, w))

    def chamber_less(self, chamber: WeylElt, v: WeylElt, w: WeylElt) -> bool:
        return v != w and self.chamber_leq(chamber, v, w)

    # ------------------------------------------------------------------
    # Parâmetros
    # ------------------------------------------------------------------
    def dual_params(self, params: StabParams) -> StabParams:
        """(-𝔠, T^{1/2}_opp, -∇), com -c𝔠₊ = cw₀𝔠₊."""
        return StabParams(
            self.group.multiply(params.chamber, self.group.longest),
            params.polarization.opposite,
            self.alcoves.negate(params.alcove),
        )

    def expected_diagonal(self, params: StabParams, y: WeylElt):
        """
        stab_y|_y pelas normalizações canônicas transportadas pela ação de W.

        A normalização não depende da alcova.
        """
        group = self.group
        if params.polarization == Polarization.COTANGENT:
            twist = group.multiply(params.chamber, group.longest)
            base = self.stable_basis.minus_diagonal
        else:
            twist = params.chamber
            base = self.stable_basis.plus_diagonal
        moved = group.multiply(group.inverse(twist), y)
        return self.ring.weyl_act(twist, base(moved))

    # ------------------------------------------------------------------
    # Famílias
    # ------------------------------------------------------------------
    def stab_general(self, params: StabParams) -> StabFamily:
        """
        Família para parâmetros arbitrários.

        Args:
            params: Câmara, polarização e alcova

        Returns:
            StabFamily: Família stab^{params}

        Raises:
            UnsupportedPolarizationError: Para polarizações fora de {T𝔅, T*𝔅}
        """
        params = StabParams(params.chamber, Polarization.parse(params.polarization), params.alcove)
        if self.repository is not None:
            cached = self.repository.find_by_params(params)
            if cached is not None:
                return cached

        base = self._finite_alcove_family(params.polarization, params.alcove.x)
        shifted = self._shift(base, params.alcove.mu)
        twist = params.chamber
        if params.polarization == Polarization.COTANGENT:
            twist = self.group.multiply(params.chamber, self.group.longest)
        classes = self._chamber_twist(shifted, twist)

        family = StabFamily(params, classes, self.ring, label=str(params))
        logger.debug(f"Família calculada para {params}")
        if self.repository is not None:
            self.repository.save(family)
        return family

    def _finite_alcove_family(self, polarization: Polarization, x: WeylElt) -> Dict[WeylElt, LocClass]:
        group = self.group
        if polarization == Polarization.COTANGENT:
            canonical = self.stable_basis.stab_minus()
            scale = self.ring.q_power(-x.length)
            return {
                y: self.hecke.word_action(Sign.MINUS, x.word, canonical[group.multiply(y, x)]).scale(scale)
                for y in group.elements
            }
        canonical = self.stable_basis.stab_plus()
        x_prime = group.multiply(x, group.longest)
        scale = self.ring.q_power(x_prime.length)
        word = group.inverse(x_prime).word
        return {
            y: self.hecke.word_action(Sign.PLUS, word, canonical[group.multiply(y, x_prime)], inverse=True).scale(scale)
            for y in group.elements
        }

    def _shift(self, classes: Dict[WeylElt, LocClass], mu: Sequence[int]) -> Dict[WeylElt, LocClass]:
        if not any(mu):
            return classes
        ring = self.ring
        shifted = {}
        for y, f in classes.items():
            inverse = 1 / ring.character(y.act_on_root(mu))
            shifted[y] = self.hecke.line_bundle(mu, f).scale(inverse)
        return shifted

    def _chamber_twist(self, classes: Dict[WeylElt, LocClass], twist: WeylElt) -> Dict[WeylElt, LocClass]:
        if twist.is_identity:
            return classes
        group = self.group
        twist_inv = group.inverse(twist)
        return {
            y: self.hecke.weyl_act_class(twist, classes[group.multiply(twist_inv, y)])
            for y in group.elements
        }

    # ------------------------------------------------------------------
    # Cruzamento de paredes
    # ------------------------------------------------------------------
    def wall_cross(self, family: StabFamily, root: RootVector) -> StabFamily:
        """
        Atravessa a parede de ∇₁ em H_{α^∨,0} para ∇₂ = s_α∇₁.

        stab^{∇₂}_y = stab^{∇₁}_y ± (q^{1/2} - q^{-1/2}) stab^{∇₁}_{ys_α} quando
        ys_α ≺ y na ordem da câmara da família; o sinal é + quando
        ⟨λ, α^∨⟩ > 0 em ∇₁ e - no sentido inverso.

        Raises:
            NotAdjacentAlcovesError: Se ∇₁ não tiver parede em H_{α^∨,0}
        """
        root = tuple(root)
        params = family.params
        if root not in self.group.root_system.positive_roots:
            raise NotAdjacentAlcovesError(f"{root} não é uma raiz positiva")
        target = self.alcoves.reflect(params.alcove, root)
        if self.alcoves.shared_zero_wall(params.alcove, target) != root:
            raise NotAdjacentAlcovesError(f"A alcova {params.alcove} não tem parede em H_{{{root},0}}")

        ring = self.ring
        coefficient = ring.q_power(1) - ring.q_power(-1)
        if self.alcoves.pairing_sign(params.alcove, root) < 0:
            coefficient = -coefficient
        reflection = self.group.reflection(root)
        classes = {}
        for y in self.group.elements:
            partner = self.group.multiply(y, reflection)
            if self.chamber_less(params.chamber, partner, y):
                classes[y] = family[y] + family[partner].scale(coefficient)
            else:
                classes[y] = family[y]
        new_params = StabParams(params.chamber, params.polarization, target)
        logger.debug(f"Parede {root} atravessada: {params.alcove} -> {target}")
        return StabFamily(new_params, classes, ring, label=str(new_params))

    def wall_cross_to(self, family: StabFamily, target: AlcoveSpec) -> StabFamily:
        """Atravessa a única parede por zero compartilhada com a alcova alvo."""
        root = self.alcoves.shared_zero_wall(family.params.alcove, target)
        return self.wall_cross(family, root)
