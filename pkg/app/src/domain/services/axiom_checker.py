"""
Verificador dos axiomas de base estável - Domain Layer

Para cada w confere:
- (suporte)      stab_w|_v = 0 a menos que v ⪯_𝔠 w
- (normalização) stab_w|_w igual à diagonal canônica
- (grau)         deg_A(stab_w|_v) ⊆ deg_A(stab_v|_v) + vλ - wλ para v ≺_𝔠 w,
                 com λ o baricentro da alcova

Famílias de câmaras gerais são primeiro levadas a 𝔠± pela ação de W.
"""

import logging
from typing import Dict

from src.domain.entities.loc_class import LocClass
from src.domain.entities.stab_family import Polarization, StabFamily
from src.domain.entities.verification_report import VerificationReport
from src.domain.entities.weyl_element import WeylElt
from src.domain.services.polytope_service import PolytopeService
from src.domain.services.stable_families import StableFamilyService

logger = logging.getLogger(__name__)


class AxiomChecker:
    """Executa os três axiomas sobre uma StabFamily."""

    def __init__(self, families: StableFamilyService, polytopes: PolytopeService):
        self.families = families
        self.polytopes = polytopes
        self.group = families.group
        self.ring = families.ring

    def _untwist(self, family: StabFamily):
        """Retorna (câmara base, classes) com a câmara reduzida a 𝔠₋ ou 𝔠₊."""
        group = self.group
        params = family.params
        if params.polarization == Polarization.COTANGENT:
            twist = group.multiply(params.chamber, group.longest)
            base_chamber = group.longest
        else:
            twist = params.chamber
            base_chamber = group.identity
        if twist.is_identity:
            return base_chamber, dict(family.classes)
        twist_inv = group.inverse(twist)
        hecke = self.families.hecke
        classes: Dict[WeylElt, LocClass] = {
            y: hecke.weyl_act_class(twist_inv, family[group.multiply(twist, y)])
            for y in group.elements
        }
        return base_chamber, classes

    def verify_axioms(self, family: StabFamily) -> VerificationReport:
        """
        Args:
            family: Família a verificar

        Returns:
            VerificationReport: Vereditos de suporte, normalização e grau por w
        """
        group = self.group
        params = family.params
        chamber, classes = self._untwist(family)
        stable_basis = self.families.stable_basis
        diagonal = (
            stable_basis.minus_diagonal if params.polarization == Polarization.COTANGENT
            else stable_basis.plus_diagonal
        )
        lam = self.families.alcoves.barycenter_root_coords(params.alcove)
        report = VerificationReport(f"axiomas {params}")

        for w in group.elements:
            stab_w = classes[w]
            support_ok = all(
                self.families.chamber_leq(chamber, v, w) for v in stab_w.support()
            )
            report.add(f"suporte[{w}]", support_ok)
            report.add(f"normalizacao[{w}]", stab_w[w] == diagonal(w))

            degree_ok = True
            w_lam = w.act_on_root(lam)
            for v in group.elements:
                if not self.families.chamber_less(chamber, v, w) or stab_w[v].is_zero():
                    continue
                if not self._degree_contained(stab_w[v], classes[v][v], v.act_on_root(lam), w_lam):
                    degree_ok = False
                    logger.debug(f"Grau falhou em stab_{w}|_{v} para {params}")
                    break
            report.add(f"grau[{w}]", degree_ok)

        logger.info(report.summary())
        return report

    def _degree_contained(self, entry, diagonal_entry, v_lam, w_lam) -> bool:
        if not entry.is_polynomial() or diagonal_entry.is_zero() or not diagonal_entry.is_polynomial():
            return False
        inner = self.polytopes.newton_polytope(entry)
        outer = self.polytopes.newton_polytope(diagonal_entry)
        shift = tuple(a - b for a, b in zip(v_lam, w_lam))
        return self.polytopes.polytope_shift_contains(inner, outer, shift)
