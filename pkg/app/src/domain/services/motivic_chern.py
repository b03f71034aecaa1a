"""
Serviço de classes de Chern motívicas - Domain Layer

Classes em K_T(𝔅)[q^{±1/2}] guardadas pelas restrições aos pontos fixos.
A dualidade 𝒟 age na base de empurrões dos pontos fixos, onde
[𝒪_v]|_v = ∏_{α>0}(1 - e^{vα}), coeficiente a coeficiente pela involução
barra.

    MC_y(X(w)° ↪ 𝔅) = q^{-ℓ(w)/2} 𝒟(i* stab⁺_w)
    MC_y(Y(w)° ↪ 𝔅) = q^{ℓ(w)/2 - dim 𝔅} i*(stab⁻_w) ⊗ [ω•_𝔅]

com y = -q^{-1} e [ω•_𝔅]|_v = (-1)^{dim 𝔅} e^{2vρ}.
"""

import logging
from typing import Dict, List, Optional

from src.domain.entities.laurent_poly import RatFunc
from src.domain.entities.loc_class import LocClass
from src.domain.entities.verification_report import VerificationReport
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import ConsistencyError
from src.domain.services.bruhat_order import BruhatOrder
from src.domain.services.csm_classes import CellKind
from src.domain.services.k_stable_basis import KStableBasisService
from src.domain.services.triangular_solver import expand_in_triangular_basis

logger = logging.getLogger(__name__)


class MotivicChernService:
    """MC_y de células de Schubert, classes [𝒪_{X(w)}] e a dualidade 𝒟."""

    def __init__(self, stable_basis: KStableBasisService, bruhat: BruhatOrder):
        self.stable_basis = stable_basis
        self.bruhat = bruhat
        self.group = stable_basis.group
        self.ring = stable_basis.ring
        self.dimension = self.group.longest.length
        self._mc: Dict[tuple, LocClass] = {}
        self._sheaves: Optional[Dict[WeylElt, LocClass]] = None

    # ------------------------------------------------------------------
    # Modelo de pontos fixos
    # ------------------------------------------------------------------
    def point_factor(self, v: WeylElt) -> RatFunc:
        """[𝒪_v]|_v = ∏_{α>0}(1 - e^{vα})."""
        total = self.ring.one
        for root in self.group.root_system.positive_roots:
            total = total * (1 - self.ring.character(v.act_on_root(root)))
        return total

    def point_class(self, v: WeylElt) -> LocClass:
        return LocClass.fixed_point(self.group, self.ring, v, self.point_factor(v))

    def to_pushforward_coefficients(self, f: LocClass) -> Dict[WeylElt, RatFunc]:
        return {v: value / self.point_factor(v) for v, value in f.items() if not value.is_zero()}

    def from_pushforward_coefficients(self, coefficients: Dict[WeylElt, RatFunc]) -> LocClass:
        return LocClass(
            self.group, self.ring, {v: c * self.point_factor(v) for v, c in coefficients.items()}
        )

    def pullback_zero_section(self, f: LocClass) -> LocClass:
        """i*: os pontos fixos de T*𝔅 e 𝔅 coincidem; q segue como parâmetro."""
        return LocClass(self.group, self.ring, dict(f.items()))

    def serre_dual(self, f: LocClass) -> LocClass:
        """𝒟: barra nos coeficientes da base de empurrões (q ↦ q^{-1}, y ↦ y^{-1})."""
        coefficients = self.to_pushforward_coefficients(f)
        return self.from_pushforward_coefficients({v: self.ring.bar(c) for v, c in coefficients.items()})

    def dualizing_factor(self, v: WeylElt) -> RatFunc:
        """[ω•_𝔅]|_v = (-1)^{dim 𝔅} e^{2vρ}, 2ρ = Σ_{α>0} α."""
        two_rho = [0] * self.group.rank
        for root in self.group.root_system.positive_roots:
            two_rho = [a + b for a, b in zip(two_rho, root)]
        value = self.ring.character(v.act_on_root(two_rho))
        return value if self.dimension % 2 == 0 else -value

    def lambda_y_cotangent(self, v: WeylElt) -> RatFunc:
        """λ_y(T*𝔅)|_v = ∏_{α>0}(1 + y e^{vα}) com y = -q^{-1}."""
        y = -self.ring.q_power(-2)
        total = self.ring.one
        for root in self.group.root_system.positive_roots:
            total = total * (1 + y * self.ring.character(v.act_on_root(root)))
        return total

    # ------------------------------------------------------------------
    # Classes motívicas
    # ------------------------------------------------------------------
    def mc_class(self, cell: CellKind, w: WeylElt) -> LocClass:
        """
        Args:
            cell: X para X(w)° (rota stab⁺ e 𝒟) ou Y para Y(w)° (rota stab⁻ e ω•)
            w: Elemento de W

        Returns:
            LocClass: Restrições de MC_{-q^{-1}} da célula, na variável q
        """
        cell = CellKind.parse(cell)
        key = (cell, w)
        if key not in self._mc:
            ring = self.ring
            if cell == CellKind.X:
                pulled = self.pullback_zero_section(self.stable_basis.stab_plus()[w])
                result = self.serre_dual(pulled).scale(ring.q_power(-w.length))
            else:
                pulled = self.pullback_zero_section(self.stable_basis.stab_minus()[w])
                scale = ring.q_power(w.length - 2 * self.dimension)
                result = pulled.map(lambda v, value: value * self.dualizing_factor(v) * scale)
            self._mc[key] = result
        return self._mc[key]

    def to_y(self, f: LocClass) -> LocClass:
        """Reescreve as restrições na variável y = -q^{-1}."""
        return f.map(lambda v, value: self.ring.to_y_variable(value))

    # ------------------------------------------------------------------
    # Feixes de Schubert
    # ------------------------------------------------------------------
    def demazure(self, i: int, f: LocClass) -> LocClass:
        """(∂_i f)(v) = (f(v) - e^{vα_i} f(vs_i)) / (1 - e^{vα_i})."""
        simple = self.group.root_system.simple_root(i)

        def apply(v: WeylElt) -> RatFunc:
            e_root = self.ring.character(v.act_on_root(simple))
            return (f[v] - e_root * f[self.group.times_simple(v, i)]) / (1 - e_root)

        return LocClass.from_function(self.group, self.ring, apply)

    def schubert_sheaf_localizations(self, w: Optional[WeylElt] = None):
        """
        [𝒪_{X(w)}] pela recursão [𝒪_{X(ws_i)}] = ∂_i[𝒪_{X(w)}], ws_i > w,
        a partir do ponto e.

        Returns:
            A classe de w, ou o dicionário completo quando w é None
        """
        if self._sheaves is None:
            group = self.group
            sheaves = {group.identity: self.point_class(group.identity)}
            for v in group.elements[1:]:
                i = next(k for k in range(group.rank) if group.is_right_descent(v, k))
                sheaves[v] = self.demazure(i, sheaves[group.times_simple(v, i)])
            self._sheaves = sheaves
        return self._sheaves if w is None else self._sheaves[w]

    def mc_expand(self, w: WeylElt) -> Dict[WeylElt, RatFunc]:
        """Coeficientes de MC(X(w)°) na base [𝒪_{X(u)}]."""
        return expand_in_triangular_basis(
            self.mc_class(CellKind.X, w),
            self.schubert_sheaf_localizations(),
            tuple(reversed(self.group.elements)),
            rule="mc-expansion",
        )

    # ------------------------------------------------------------------
    # Verificações
    # ------------------------------------------------------------------
    def partial_sum(self, cell: CellKind, v: WeylElt) -> LocClass:
        """Σ_{u≤v} MC(X(u)°), ou Σ_{u≥v} MC(Y(u)°) para células opostas."""
        cell = CellKind.parse(cell)
        members = self.bruhat.below(v) if cell == CellKind.X else self.bruhat.above(v)
        total = LocClass(self.group, self.ring, {})
        for u in members:
            total = total + self.mc_class(cell, u)
        return total

    def lambda_y_class(self) -> LocClass:
        return LocClass.from_function(self.group, self.ring, self.lambda_y_cotangent)

    def additivity_report(self) -> VerificationReport:
        report = VerificationReport(f"aditividade motívica {self.group.root_system.label}")
        group = self.group
        total_cell = {CellKind.X: group.longest, CellKind.Y: group.identity}
        for cell in CellKind:
            for v in group.elements:
                partial = self.partial_sum(cell, v)
                genuine = all(value.is_polynomial() for _, value in partial.items())
                report.add(f"classe-genuina[{cell.value}({v})]", genuine)
            report.add(
                f"lambda_y[{cell.value}]",
                self.partial_sum(cell, total_cell[cell]) == self.lambda_y_class(),
            )
        logger.info(report.summary())
        return report

    def y_zero_defects(self) -> List[WeylElt]:
        """w com Σ_{u≤w} MC(X(u)°)|_{y=0} ≠ [𝒪_{X(w)}]."""
        failures = []
        sheaves = self.schubert_sheaf_localizations()
        for w in self.group.elements:
            in_y = self.to_y(self.partial_sum(CellKind.X, w))
            at_zero = in_y.map(lambda v, value: self.ring.substitute(value, self.ring.y_slot, 0))
            if at_zero != sheaves[w]:
                failures.append(w)
        return failures

    def route_defects(self) -> List[WeylElt]:
        """u com MC(Y(u)°) ≠ w₀·MC(X(w₀u)°)."""
        longest = self.group.longest
        failures = []
        for u in self.group.elements:
            mirrored = self.mc_class(CellKind.X, self.group.multiply(longest, u)).weyl_act(longest)
            if self.mc_class(CellKind.Y, u) != mirrored:
                failures.append(u)
        return failures

    def serre_dual_involution_defects(self) -> List[WeylElt]:
        failures = []
        for w in self.group.elements:
            f = self.stable_basis.stab_plus()[w]
            if self.serre_dual(self.serre_dual(f)) != f:
                failures.append(w)
        return failures

    def demazure_idempotence_defects(self) -> List[int]:
        """∂_i² = ∂_i sobre as classes [𝒪_{X(w)}]."""
        failures = []
        sheaves = self.schubert_sheaf_localizations()
        for i in range(self.group.rank):
            for f in sheaves.values():
                once = self.demazure(i, f)
                if self.demazure(i, once) != once:
                    failures.append(i)
                    break
        return failures

    def require_consistent(self) -> None:
        """
        Raises:
            ConsistencyError: Se as duas rotas de MC divergirem
        """
        defects = self.route_defects()
        if defects:
            raise ConsistencyError(
                f"MC(Y(u)°) e w₀·MC(X(w₀u)°) divergem em {[str(u) for u in defects]}", rule="mc-two-routes"
            )
