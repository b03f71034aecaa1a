"""
Testes para as famílias canônicas stab± em K-teoria.

Os valores de A1 foram conferidos à mão (a = e^α):
stab⁻_e = (1 - q/a, 1 - q), stab⁻_s = (0, q^{1/2}(1 - a)),
stab⁺_e = (1 - a, 0), stab⁺_s = (q^{1/2} - q^{-1/2}, q^{-1/2}(q - 1/a)).
"""

from fractions import Fraction

import pytest

from src.domain.entities.polytope import Polytope
from src.domain.entities.stab_family import Polarization, StabFamily


class TestKStableBasisA1:
    """
    Testes com os valores explícitos de A1.
    """

    @pytest.fixture
    def ring(self, container_a1):
        return container_a1.k_ring

    @pytest.fixture
    def a(self, ring):
        return ring.character((1,))

    def test_stab_minus_values(self, container_a1, ring, a, a1_elements):
        """
        Testa as restrições de stab⁻ nos dois pontos fixos.
        """
        # Arrange
        e, s = a1_elements

        # Act
        minus = container_a1.stable_basis.stab_minus()

        # Assert
        assert minus[e][e] == 1 - ring.q / a
        assert minus[e][s] == 1 - ring.q
        assert minus[s][e].is_zero()
        assert minus[s][s] == ring.q_power(1) * (1 - a)

    def test_stab_plus_values(self, container_a1, ring, a, a1_elements):
        """
        Testa as restrições de stab⁺ nos dois pontos fixos.
        """
        # Arrange
        e, s = a1_elements

        # Act
        plus = container_a1.stable_basis.stab_plus()

        # Assert
        assert plus[e][e] == 1 - a
        assert plus[e][s].is_zero()
        assert plus[s][e] == ring.q_power(1) - ring.q_power(-1)
        assert plus[s][s] == ring.q_power(-1) * (ring.q - 1 / a)

    def test_stab_minus_values_parsed_from_text(self, container_a1, ring, a1_elements):
        """
        Testa os mesmos valores escritos na forma textual do anel.
        """
        # Arrange
        e, s = a1_elements
        minus = container_a1.stable_basis.stab_minus()

        # Act & Assert
        assert minus[e][e] == ring.parse("1 - e[-1]*q")
        assert minus[s][s] == ring.parse("q^{1/2} - e[1]*q^{1/2}")

    def test_euler_denominator(self, container_a1, ring, a, a1_elements):
        # Arrange
        e, s = a1_elements

        # Act & Assert
        basis = container_a1.stable_basis
        assert basis.euler_denominator(e) == (1 - a) * (1 - ring.q / a)
        assert basis.euler_denominator(s) == (1 - 1 / a) * (1 - ring.q * a)

    def test_params(self, container_a1):
        """
        Testa os parâmetros canônicos (𝔠₋, T*𝔅, ∇₊) e (𝔠₊, T𝔅, ∇₋).
        """
        # Arrange
        basis = container_a1.stable_basis
        group = container_a1.group

        # Act
        minus, plus = basis.minus_params(), basis.plus_params()

        # Assert
        assert minus.chamber == group.longest
        assert minus.polarization == Polarization.COTANGENT
        assert minus.alcove.x == group.identity
        assert plus.chamber == group.identity
        assert plus.polarization == Polarization.TANGENT
        assert plus.alcove.x == group.longest


class TestKStableBasis:
    """
    Testes estruturais de stab± em posto 2.
    """

    @pytest.mark.parametrize("fixture", ["container_a1", "container_a2", "container_b2"])
    def test_duality(self, fixture, request):
        """
        Testa ⟨stab⁺_v, stab⁻_w⟩ = δ_{v,w}.
        """
        # Arrange
        basis = request.getfixturevalue(fixture).stable_basis

        # Act & Assert
        assert basis.duality_defects() == []

    @pytest.mark.parametrize("fixture", ["container_a2", "container_b2"])
    def test_hecke_action(self, fixture, request):
        """
        Testa as fórmulas de dois ramos para T_α e T'_α.
        """
        # Arrange
        basis = request.getfixturevalue(fixture).stable_basis

        # Act & Assert
        assert basis.hecke_action_defects() == []

    def test_stab_minus_matches_hecke_formula(self, container_a2):
        """
        Testa a recursão contra q^{ℓ(w₀)-ℓ(w)/2}(τ⁻_{w₀w})^{-1}•(x_{-w₀}f_{w₀}).
        """
        # Arrange
        basis = container_a2.stable_basis

        # Act
        recursion = basis.stab_minus()
        formula = basis.stab_minus_via_hecke_formula()

        # Assert
        for w in container_a2.group.elements:
            assert recursion[w] == formula[w]

    def test_diagonals_and_support(self, container_a2):
        """
        Testa a normalização diagonal e o suporte em {v ≥ w}.
        """
        # Arrange
        basis, bruhat = container_a2.stable_basis, container_a2.bruhat
        minus = basis.stab_minus()

        # Act & Assert
        for w in container_a2.group.elements:
            assert minus[w][w] == basis.minus_diagonal(w)
            assert set(minus[w].support()) <= set(bruhat.above(w))

    @pytest.mark.parametrize("fixture", ["container_a2", "container_b2"])
    def test_axioms(self, fixture, request):
        """
        Testa suporte, normalização e grau para as duas famílias canônicas.
        """
        # Arrange
        container = request.getfixturevalue(fixture)
        basis = container.stable_basis

        # Act
        minus = container.axioms.verify_axioms(basis.stab_minus())
        plus = container.axioms.verify_axioms(basis.stab_plus())

        # Assert
        assert minus.passed, minus.failures()
        assert plus.passed, plus.failures()


def _corruptions(container):
    """Famílias com uma entrada fora da diagonal de stab⁻ multiplicada por e^{±α_k}."""
    family = container.stable_basis.stab_minus()
    ring, group = family.ring, container.group
    for w in group.elements:
        for v in family[w].support():
            if v == w:
                continue
            for k in range(group.rank):
                for sign in (1, -1):
                    root = tuple(sign if i == k else 0 for i in range(group.rank))
                    factor = ring.character(root)
                    classes = dict(family.classes)
                    classes[w] = family[w].map(lambda u, value, v=v, factor=factor: value * factor if u == v else value)
                    yield w, StabFamily(family.params, classes, ring)


class TestDegreeAxiom:
    """
    Testes para o axioma de grau, incluindo controles negativos.
    """

    @pytest.mark.parametrize("t, inside", [(Fraction(1, 2), True), (Fraction(1, 5), True), (Fraction(3, 2), False)])
    def test_a1_interval_instance(self, container_a1, a1_elements, t, inside):
        """
        Testa deg(stab⁻_e|_s) = {0} ⊆ [−tα, (1−t)α].
        """
        # Arrange
        e, s = a1_elements
        minus = container_a1.stable_basis.stab_minus()
        polytopes = container_a1.polytopes

        # Act
        inner = polytopes.newton_polytope(minus[e][s])
        outer = polytopes.newton_polytope(minus[s][s])

        # Assert
        assert inner == Polytope(((0,),))
        assert outer == Polytope(((0,), (1,)))
        assert polytopes.polytope_shift_contains(inner, outer, (-t,)) is inside

    def test_a1_barycenter_gives_half_shift(self, container_a1, a1_elements):
        # Arrange
        e, _ = a1_elements
        minus = container_a1.stable_basis.stab_minus()

        # Act
        report = container_a1.axioms.verify_axioms(minus)

        # Assert
        assert container_a1.alcoves.barycenter_root_coords(minus.params.alcove) == (Fraction(1, 4),)
        assert {check.name: check.passed for check in report.checks}[f"grau[{e}]"] is True

    def test_every_corruption_fails_in_a1(self, container_a1):
        # Arrange
        corrupted = list(_corruptions(container_a1))

        # Act
        reports = [(w, container_a1.axioms.verify_axioms(family)) for w, family in corrupted]

        # Assert
        assert len(reports) == 2
        for w, report in reports:
            assert [check.name for check in report.failures()] == [f"grau[{w}]"]

    def test_corrupted_entry_fails_in_a2(self, container_a2):
        """
        Testa stab⁻_e|_{w₀} multiplicada por e^{α1}.
        """
        # Arrange
        group = container_a2.group
        family = container_a2.stable_basis.stab_minus()
        factor = container_a2.k_ring.character((1, 0))
        classes = dict(family.classes)
        classes[group.identity] = family[group.identity].map(
            lambda u, value: value * factor if u == group.longest else value
        )

        # Act
        report = container_a2.axioms.verify_axioms(StabFamily(family.params, classes, family.ring))

        # Assert
        assert [check.name for check in report.failures()] == [f"grau[{group.identity}]"]

    @pytest.mark.slow
    def test_every_corruption_fails_in_a2(self, container_a2):
        # Arrange
        corrupted = list(_corruptions(container_a2))

        # Act
        undetected = [w for w, family in corrupted if container_a2.axioms.verify_axioms(family).passed]

        # Assert
        assert len(corrupted) == 52
        assert undetected == []
