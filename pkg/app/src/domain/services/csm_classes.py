"""
Serviço de classes CSM de células de Schubert - Domain Layer

ι*stab₊(w)|_{ħ=1} = (-1)^{dim 𝔅} c_SM(X(w)°) e, do lado oposto,
ι*stab₋(w)|_{ħ=1} = (-1)^{dim 𝔅} c_SM(Y(w)°). As classes são expandidas
nas classes de Schubert, c_SM(X(w)°) = Σ_u c(w,u)[X(u)], e a positividade
dos coeficientes é conferida no limite não equivariante.

Aplicando princípios SOLID:
- SRP: Responsável apenas pelas classes CSM e suas expansões
- DIP: Depende do serviço cohomológico injetado
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Dict

from src.domain.entities.laurent_poly import LaurentPoly, RatFunc
from src.domain.entities.loc_class import LocClass
from src.domain.entities.verification_report import VerificationReport
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import ConsistencyError, ValidationError
from src.domain.services.cohomological_stable_basis import CohomologicalStableBasisService
from src.domain.services.triangular_solver import expand_in_triangular_basis

logger = logging.getLogger(__name__)


class CellKind(str, Enum):
    """Células de Schubert: X(w)° = BwB/B e Y(w)° = B⁻wB/B."""
    X = "X"
    Y = "Y"

    @classmethod
    def parse(cls, text) -> "CellKind":
        if isinstance(text, cls):
            return text
        key = str(text).strip().upper().rstrip("°")
        if key not in ("X", "Y"):
            raise ValidationError(f"Célula desconhecida: {text}", field="cell")
        return cls(key)


class CSMClassService:
    """c_SM de células de Schubert e seus coeficientes c(w,u)."""

    def __init__(self, cohomology: CohomologicalStableBasisService):
        self.cohomology = cohomology
        self.group = cohomology.group
        self.ring = cohomology.ring
        self._expansions: Dict[tuple, Dict[WeylElt, RatFunc]] = {}

    def _at_hbar_one(self, f: RatFunc) -> RatFunc:
        return self.ring.substitute(f, self.ring.h_slot, 1)

    def csm_class(self, cell: CellKind, w: WeylElt) -> LocClass:
        """
        Args:
            cell: X para X(w)° (via stab₊) ou Y para Y(w)° (via stab₋)
            w: Elemento de W

        Returns:
            LocClass: Restrições de c_SM da célula nos pontos fixos
        """
        cell = CellKind.parse(cell)
        stab = self.cohomology.stab_plus_coh(w) if cell == CellKind.X else self.cohomology.stab_minus_coh(w)
        sign = 1 if self.cohomology.dimension % 2 == 0 else -1
        return stab.map(lambda v, value: self._at_hbar_one(value) * sign)

    def schubert_class(self, cell: CellKind, u: WeylElt) -> LocClass:
        cell = CellKind.parse(cell)
        return self.cohomology.schubert_x(u) if cell == CellKind.X else self.cohomology.schubert_y(u)

    def csm_expand(self, cell: CellKind, w: WeylElt) -> Dict[WeylElt, RatFunc]:
        """
        Coeficientes c(w,u) da expansão na base de Schubert da mesma família.

        Raises:
            ConsistencyError: Se algum coeficiente não for polinomial
        """
        cell = CellKind.parse(cell)
        key = (cell, w)
        if key not in self._expansions:
            elements = self.group.elements
            basis = {u: self.schubert_class(cell, u) for u in elements}
            # [X(u)] tem suporte em v ≤ u; [Y(u)] em v ≥ u
            order = tuple(reversed(elements)) if cell == CellKind.X else elements
            coefficients = expand_in_triangular_basis(
                self.csm_class(cell, w), basis, order, rule="csm-expansion"
            )
            for u, c in coefficients.items():
                if not c.is_polynomial():
                    raise ConsistencyError(
                        f"Coeficiente c({w},{u}) não polinomial: {c}", rule="csm-polynomial"
                    )
            self._expansions[key] = coefficients
        return self._expansions[key]

    def constant_term(self, f: RatFunc) -> Fraction:
        """Limite não equivariante: α_i ↦ 0."""
        for slot in self.ring.char_slots:
            f = self.ring.substitute(f, slot, 0)
        if f.is_zero():
            return Fraction(0)
        return LaurentPoly.from_ratfunc(f).coefficient(tuple([0] * self.ring.ngens))

    def csm_expand_nonequivariant(self, cell: CellKind, w: WeylElt) -> Dict[WeylElt, Fraction]:
        return {
            u: self.constant_term(c) for u, c in self.csm_expand(cell, w).items()
        }

    def has_nonnegative_monomials(self, f: RatFunc) -> bool:
        if f.is_zero():
            return True
        return all(coeff >= 0 for _, coeff in LaurentPoly.from_ratfunc(f).terms)

    def tangent_chern_class(self, v: WeylElt) -> RatFunc:
        """c(T𝔅)|_v = ∏_{α>0}(1 - vα)."""
        total = self.ring.one
        for root in self.group.root_system.positive_roots:
            total = total * (1 - self.ring.linear_form(v.act_on_root(root)))
        return total

    def characteristic_cycle_signs(self) -> Dict[WeylElt, int]:
        """Sinal ε em stab₊(w) = ε[Char]: (-1)^{dim 𝔅 - ℓ(w)}."""
        dimension = self.cohomology.dimension
        return {w: 1 if (dimension - w.length) % 2 == 0 else -1 for w in self.group.elements}

    # ------------------------------------------------------------------
    # Verificações
    # ------------------------------------------------------------------
    def positivity_report(self) -> VerificationReport:
        """
        Positividade não equivariante (afirmada) e monomial equivariante (reportada).
        """
        report = VerificationReport(f"positividade CSM {self.group.root_system.label}")
        for cell in CellKind:
            for w in self.group.elements:
                expansion = self.csm_expand(cell, w)
                constants = self.csm_expand_nonequivariant(cell, w)
                ok = all(c >= 0 and c.denominator == 1 for c in constants.values())
                report.add(f"nao-equivariante[{cell.value}({w})]", ok)
                report.add(f"diagonal[{cell.value}({w})]", constants.get(w) == 1)
                equivariant = all(self.has_nonnegative_monomials(c) for c in expansion.values())
                report.add(f"equivariante[{cell.value}({w})]", equivariant, asserted=False)
        logger.info(report.summary())
        return report

    def additivity_defects(self) -> Dict[str, list]:
        """Pontos v com Σ_w c_SM(célula(w))|_v ≠ c(T𝔅)|_v, por família de células."""
        failures: Dict[str, list] = {}
        for cell in CellKind:
            total = LocClass(self.group, self.ring, {})
            for w in self.group.elements:
                total = total + self.csm_class(cell, w)
            failures[cell.value] = [
                v for v in self.group.elements if total[v] != self.tangent_chern_class(v)
            ]
        return failures
