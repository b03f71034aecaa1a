"""
Testes para CharacterRing e RatFunc.
"""

import random
from fractions import Fraction

import pytest

from src.domain.entities.laurent_poly import CharacterRing, RingKind
from src.domain.exceptions import ParseError, ValidationError


class TestCharacterRing:
    """
    Testes para aritmética exata, serialização e especializações.
    """

    @pytest.fixture
    def ring(self, container_a1):
        return container_a1.k_ring

    def test_equality_is_decided_by_cross_multiplication(self, ring):
        """
        Testa (1 - e^{2α})/(1 - e^α) = 1 + e^α.
        """
        # Arrange
        a = ring.character((1,))

        # Act
        quotient = (1 - a ** 2) / (1 - a)

        # Assert
        assert quotient == 1 + a
        assert quotient.is_polynomial()

    def test_serialize_polynomial(self, ring):
        """
        Testa a forma textual canônica de 1 - e^α.
        """
        # Act
        text = ring.serialize(1 - ring.character((1,)))

        # Assert
        assert text == "1 - e[1]"

    def test_serialize_zero(self, ring):
        assert ring.serialize(ring.zero) == "0"

    @pytest.mark.parametrize(
        "builder",
        [
            lambda r: 1 - r.q / r.character((1,)),
            lambda r: r.q_power(1) - r.q_power(-1),
            lambda r: (1 - r.q_power(-2) * r.character((1,))) / (1 - r.character((1,))),
            lambda r: Fraction(3, 2) * r.y ** 2 - r.q_power(-3),
        ],
    )
    def test_parse_reads_serialized_form(self, ring, builder):
        """
        Testa que parse interpreta a forma produzida por serialize.
        """
        # Arrange
        value = builder(ring)

        # Act
        parsed = ring.parse(ring.serialize(value))

        # Assert
        assert parsed == value

    @pytest.mark.parametrize("text", ["e[1,2]", "x + 1", "q^{1/3}", "a1"])
    def test_parse_invalid_text_raises_error(self, ring, text):
        """
        Testa textos fora da gramática do anel de K-teoria.
        """
        # Act & Assert
        with pytest.raises(ParseError):
            ring.parse(text)

    def test_bar_involution(self, ring):
        """
        Testa e^α ↦ e^{-α} e q^{1/2} ↦ q^{-1/2}.
        """
        # Arrange
        value = ring.q_power(1) * ring.character((1,))

        # Act
        barred = ring.bar(value)

        # Assert
        assert barred == ring.q_power(-1) / ring.character((1,))
        assert ring.bar(barred) == value

    def test_invert_characters_keeps_q(self, ring):
        # Act
        inverted = ring.invert_characters(ring.q * ring.character((1,)))

        # Assert
        assert inverted == ring.q / ring.character((1,))

    def test_substitute_q(self, ring):
        """
        Testa a especialização q^{1/2} = 2.
        """
        # Arrange
        value = ring.q - ring.character((1,))

        # Act
        result = ring.substitute(value, ring.slot_of("q"), 2)

        # Assert
        assert result == 4 - ring.character((1,))

    def test_substitute_zero_denominator_raises_error(self, ring):
        """
        Testa que anular um denominador levanta ValidationError.
        """
        # Arrange
        value = 1 / (1 - ring.q)

        # Act & Assert
        with pytest.raises(ValidationError, match="anula um denominador"):
            ring.substitute(value, ring.slot_of("q"), 1)

    def test_slot_of_unknown_name_raises_error(self, ring):
        with pytest.raises(ValidationError, match="Variável desconhecida"):
            ring.slot_of("z")

    def test_to_y_variable(self, ring):
        """
        Testa q ↦ -y^{-1}.
        """
        # Act & Assert
        assert ring.to_y_variable(ring.q) == -1 / ring.y
        assert ring.to_y_variable(ring.q ** 2) == 1 / ring.y ** 2

    def test_to_y_variable_rejects_half_powers(self, ring):
        with pytest.raises(ValidationError, match="semi-inteira"):
            ring.to_y_variable(ring.q_power(1))

    def test_mixing_rings_raises_error(self, ring, container_a1):
        """
        Testa que elementos de anéis diferentes não se combinam.
        """
        # Act & Assert
        with pytest.raises(ValidationError, match="anéis diferentes"):
            ring.q + container_a1.coh_ring.hbar

    def test_cohomology_ring_has_no_q(self, container_a1):
        with pytest.raises(ValidationError, match="indisponível"):
            container_a1.coh_ring.q

    def test_weyl_action_on_characters(self, container_a2):
        """
        Testa s1·e^{α2} = e^{α1+α2}.
        """
        # Arrange
        ring = container_a2.k_ring
        s1 = container_a2.group.simple(0)

        # Act
        moved = ring.weyl_act(s1, ring.character((0, 1)))

        # Assert
        assert moved == ring.character((1, 1))

    def test_doubled_ring_names(self, container_a2):
        # Act
        ring = CharacterRing(container_a2.root_system, RingKind.DOUBLED)

        # Assert
        assert ring.names == ("a1", "a2", "b1", "b2", "t")


SEEDS = range(5)


def _random_fraction(ring, rng):
    return ring.random_laurent(rng, terms=3) / ring.random_laurent(rng, terms=2)


class TestRingProperties:
    """
    Testes de propriedades sobre elementos pseudoaleatórios (sementes fixas).
    """

    @pytest.mark.parametrize("seed", SEEDS)
    def test_field_axioms(self, container_a2, seed):
        # Arrange
        ring = container_a2.k_ring
        rng = random.Random(seed)
        f, g, h = (_random_fraction(ring, rng) for _ in range(3))

        # Act & Assert
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f - f).is_zero()
        assert f * (1 / f) == ring.one

    @pytest.mark.parametrize("seed", SEEDS)
    def test_weyl_action_is_a_group_action(self, container_a2, seed):
        """
        Testa u(v f) = (uv) f para todos os pares de A2.
        """
        # Arrange
        ring = container_a2.k_ring
        group = container_a2.group
        f = _random_fraction(ring, random.Random(seed))

        # Act & Assert
        for u in group.elements:
            for v in group.elements:
                assert ring.weyl_act(u, ring.weyl_act(v, f)) == ring.weyl_act(group.multiply(u, v), f)
        assert ring.weyl_act(group.identity, f) == f

    @pytest.mark.parametrize("seed", SEEDS)
    def test_bar_is_an_involution(self, container_a2, seed):
        # Arrange
        ring = container_a2.k_ring
        f = _random_fraction(ring, random.Random(seed))

        # Act & Assert
        assert ring.bar(ring.bar(f)) == f
        assert f.bar().bar() == f

    @pytest.mark.parametrize("seed", SEEDS)
    @pytest.mark.parametrize("kind", ["k_ring", "coh_ring"])
    def test_polynomials_are_closed_under_products(self, container_a2, seed, kind):
        # Arrange
        ring = getattr(container_a2, kind)
        rng = random.Random(seed)
        f, g = ring.random_laurent(rng), ring.random_laurent(rng)

        # Act
        product = f * g

        # Assert
        assert f.is_polynomial() and g.is_polynomial()
        assert product.is_polynomial()
