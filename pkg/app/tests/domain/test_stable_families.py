"""
Testes para famílias com parâmetros gerais, alcovas e cruzamento de paredes.
"""

from fractions import Fraction

import pytest

from src.application.services.verification_suite import same_family
from src.domain.entities.alcove import AlcoveSpec
from src.domain.entities.stab_family import Polarization, StabParams
from src.domain.exceptions import (
    NotAdjacentAlcovesError,
    ParseError,
    UnsupportedPolarizationError,
    WallPointError,
)


class TestAlcoveService:
    """
    Testes para a descrição x∇₊ + μ das alcovas.
    """

    def test_parse_and_str(self, container_a2):
        # Arrange
        alcoves = container_a2.alcoves

        # Act
        alcove = alcoves.parse("s1.s2;1,0")

        # Assert
        assert alcove.x == container_a2.group.from_word((0, 1))
        assert alcove.mu == (1, 0)
        assert str(alcove) == "s1.s2;1,0"

    def test_zero_shorthand(self, container_a2):
        assert container_a2.alcoves.parse("e;0").mu == (0, 0)

    @pytest.mark.parametrize("text", ["e", "e;1", "e;a,b", "s4;0"])
    def test_parse_invalid_alcove(self, container_a2, text):
        with pytest.raises(ParseError):
            container_a2.alcoves.parse(text)

    def test_zero_walls_of_fundamental_alcove(self, container_a2):
        """
        Testa que ∇₊ tem paredes por zero apenas nas raízes simples.
        """
        # Act
        walls = container_a2.alcoves.zero_walls(container_a2.alcoves.parse("e;0"))

        # Assert
        assert sorted(walls) == [(0, 1), (1, 0)]

    def test_shared_zero_wall(self, container_a2):
        # Arrange
        alcoves = container_a2.alcoves

        # Act
        root = alcoves.shared_zero_wall(alcoves.parse("e;0"), alcoves.parse("s1;0"))

        # Assert
        assert root == (1, 0)

    def test_non_adjacent_alcoves(self, container_a2):
        # Arrange
        alcoves = container_a2.alcoves

        # Act & Assert
        with pytest.raises(NotAdjacentAlcovesError):
            alcoves.shared_zero_wall(alcoves.parse("e;0"), alcoves.parse("s1.s2.s1;0"))

    def test_negate(self, container_a2):
        """
        Testa -∇₊ = ∇₋.
        """
        # Arrange
        alcoves = container_a2.alcoves

        # Act
        negated = alcoves.negate(alcoves.parse("e;0"))

        # Assert
        assert negated == AlcoveSpec(container_a2.group.longest, (0, 0))

    def test_decompose_barycenter_of_fundamental_alcove(self, container_a2):
        # Arrange
        alcoves = container_a2.alcoves

        # Act
        alcove = alcoves.decompose_alcove(alcoves.barycenter(alcoves.fundamental()))

        # Assert
        assert alcove == alcoves.fundamental()

    def test_decompose_negated_point_in_a1(self, container_a1):
        """
        Testa que -α/4 cai em ∇₋ = w₀∇₊.
        """
        # Arrange
        alcoves = container_a1.alcoves
        point = tuple(-c for c in alcoves.barycenter(alcoves.fundamental()))

        # Act
        alcove = alcoves.decompose_alcove(point)

        # Assert
        assert alcove == AlcoveSpec(container_a1.group.longest, (0,))

    def test_decompose_translated_barycenter(self, container_a2):
        # Arrange
        alcoves = container_a2.alcoves
        shifted = AlcoveSpec(container_a2.group.identity, (1, 0))

        # Act
        alcove = alcoves.decompose_alcove(alcoves.barycenter(shifted))

        # Assert
        assert alcove == shifted
        assert alcoves.contains(shifted, alcoves.barycenter(shifted))

    def test_decompose_point_on_wall(self, container_a2):
        with pytest.raises(WallPointError, match="está sobre uma parede"):
            container_a2.alcoves.decompose_alcove((Fraction(1, 2), Fraction(1, 2)))


class TestStableFamilyService:
    """
    Testes para stab_general e wall_cross.
    """

    def test_general_family_reproduces_canonical_ones(self, container_a2):
        """
        Testa que os parâmetros canônicos devolvem stab⁻ e stab⁺.
        """
        # Arrange
        basis, families = container_a2.stable_basis, container_a2.families

        # Act
        minus = families.stab_general(basis.minus_params())
        plus = families.stab_general(basis.plus_params())

        # Assert
        assert same_family(minus, basis.stab_minus())
        assert same_family(plus, basis.stab_plus())

    def test_dual_params(self, container_a2):
        # Arrange
        families, basis = container_a2.families, container_a2.stable_basis

        # Act
        dual = families.dual_params(basis.minus_params())

        # Assert
        assert dual == basis.plus_params()

    def test_general_family_is_dual_to_its_dual(self, container_a2):
        """
        Testa ⟨stab^{-𝔠,T_opp,-∇}_v, stab^{𝔠,T,∇}_w⟩ = δ_{v,w} fora dos parâmetros canônicos.
        """
        # Arrange
        group, ring = container_a2.group, container_a2.k_ring
        families, basis = container_a2.families, container_a2.stable_basis
        params = StabParams(group.simple(0), Polarization.COTANGENT, AlcoveSpec(group.identity, (0, 0)))

        # Act
        family = families.stab_general(params)
        dual = families.stab_general(families.dual_params(params))

        # Assert
        for w in group.elements:
            for v in group.elements:
                expected = ring.one if v == w else ring.zero
                assert basis.pairing_k(family[w], dual[v]) == expected

    def test_general_family_satisfies_axioms(self, container_a2):
        # Arrange
        group = container_a2.group
        params = StabParams(group.longest, Polarization.COTANGENT, AlcoveSpec(group.identity, (1, 0)))

        # Act
        report = container_a2.axioms.verify_axioms(container_a2.families.stab_general(params))

        # Assert
        assert report.passed, report.failures()

    def test_wall_cross_matches_direct_computation(self, container_a2):
        """
        Testa que atravessar uma parede coincide com o cálculo direto na alcova vizinha.
        """
        # Arrange
        families, alcoves = container_a2.families, container_a2.alcoves
        family = families.stab_general(container_a2.stable_basis.minus_params())

        # Act & Assert
        for root in alcoves.zero_walls(family.params.alcove):
            crossed = families.wall_cross(family, root)
            assert same_family(crossed, families.stab_general(crossed.params))

    def test_wall_cross_round_trip(self, container_a2):
        # Arrange
        families, alcoves = container_a2.families, container_a2.alcoves
        family = families.stab_general(container_a2.stable_basis.plus_params())
        root = alcoves.zero_walls(family.params.alcove)[0]

        # Act
        back = families.wall_cross(families.wall_cross(family, root), root)

        # Assert
        assert same_family(back, family)

    def test_wall_cross_to_target(self, container_a2):
        # Arrange
        families, alcoves = container_a2.families, container_a2.alcoves
        family = families.stab_general(container_a2.stable_basis.minus_params())

        # Act
        crossed = families.wall_cross_to(family, alcoves.parse("s1;0"))

        # Assert
        assert crossed.params.alcove == alcoves.parse("s1;0")

    def test_wall_cross_through_non_wall(self, container_a2):
        """
        Testa que α1 + α2 não é parede de ∇₊.
        """
        # Arrange
        families = container_a2.families
        family = families.stab_general(container_a2.stable_basis.minus_params())

        # Act & Assert
        with pytest.raises(NotAdjacentAlcovesError):
            families.wall_cross(family, (1, 1))

    def test_chamber_order(self, container_a2):
        """
        Testa que a ordem de 𝔠₋ é a ordem de Bruhat invertida.
        """
        # Arrange
        group, families = container_a2.group, container_a2.families

        # Act & Assert
        assert families.chamber_leq(group.identity, group.identity, group.longest) is True
        assert families.chamber_leq(group.longest, group.longest, group.identity) is True

    def test_unsupported_polarization(self):
        with pytest.raises(UnsupportedPolarizationError):
            Polarization.parse("canonical")
