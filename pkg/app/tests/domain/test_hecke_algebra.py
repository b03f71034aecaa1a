"""
Testes para a álgebra de Hecke e sua ação sobre classes localizadas.
"""

import random

import pytest

from src.domain.entities.loc_class import LocClass
from src.domain.entities.qw_element import QWElt
from src.domain.exceptions import ValidationError
from src.domain.services.hecke_algebra import Sign


def random_class(container, seed):
    rng = random.Random(seed)
    ring = container.k_ring
    return LocClass.from_function(container.group, ring, lambda v: ring.random_laurent(rng, terms=2))


class TestHeckeAlgebra:
    """
    Testes para relações quadráticas, de tranças e inversas.
    """

    @pytest.mark.parametrize("fixture", ["container_a1", "container_a2", "container_b2"])
    def test_quadratic_relation(self, fixture, request):
        """
        Testa (T_i + 1)(T_i - q) = 0 sobre uma classe qualquer.
        """
        # Arrange
        container = request.getfixturevalue(fixture)
        hecke, ring = container.hecke, container.k_ring
        f = random_class(container, seed=7)

        # Act & Assert
        for i in range(container.group.rank):
            tf = hecke.t_action(i, f)
            assert (hecke.t_action(i, tf) - tf.scale(ring.q - 1) - f.scale(ring.q)).is_zero()

    @pytest.mark.parametrize("sign", [Sign.MINUS, Sign.PLUS])
    def test_braid_relation_a2(self, container_a2, sign):
        """
        Testa T_1T_2T_1 = T_2T_1T_2 nas duas normalizações.
        """
        # Arrange
        hecke = container_a2.hecke
        f = random_class(container_a2, seed=11)

        # Act
        left = hecke.word_action(sign, (0, 1, 0), f)
        right = hecke.word_action(sign, (1, 0, 1), f)

        # Assert
        assert left == right

    def test_inverse_actions(self, container_a2):
        """
        Testa T_i^{-1}T_i = id e T'_i^{-1}T'_i = id.
        """
        # Arrange
        hecke = container_a2.hecke
        f = random_class(container_a2, seed=3)

        # Act & Assert
        for i in range(2):
            assert hecke.t_inverse_action(i, hecke.t_action(i, f)) == f
            assert hecke.tprime_inverse_action(i, hecke.tprime_action(i, f)) == f

    def test_word_action_inverse_undoes_word(self, container_a2):
        # Arrange
        hecke = container_a2.hecke
        f = random_class(container_a2, seed=5)
        word = (0, 1, 0)

        # Act
        result = hecke.word_action(Sign.MINUS, word, hecke.word_action(Sign.MINUS, word, f), inverse=True)

        # Assert
        assert result == f

    def test_bullet_action_of_deltas_is_left_action(self, container_a2):
        """
        Testa δ_w•(δ_u•f) = δ_{wu}•f.
        """
        # Arrange
        group, ring, hecke = container_a2.group, container_a2.k_ring, container_a2.hecke
        f = random_class(container_a2, seed=13)
        w, u = group.simple(0), group.from_word((1, 0))

        # Act
        nested = hecke.bullet_action(QWElt.delta(group, ring, w), hecke.bullet_action(QWElt.delta(group, ring, u), f))
        direct = hecke.bullet_action(QWElt.delta(group, ring, group.multiply(w, u)), f)

        # Assert
        assert nested == direct

    def test_dl_element_acts_like_generator(self, container_a2):
        """
        Testa que τ⁻_i• coincide com T_i.
        """
        # Arrange
        hecke = container_a2.hecke
        f = random_class(container_a2, seed=17)

        # Act & Assert
        assert hecke.bullet_action(hecke.dl_element(Sign.MINUS, 1), f) == hecke.t_action(1, f)

    def test_qw_inverse(self, container_a2):
        """
        Testa (τ⁻_w)^{-1}τ⁻_w = 1 em Q_W.
        """
        # Arrange
        group, ring, hecke = container_a2.group, container_a2.k_ring, container_a2.hecke
        w = group.longest

        # Act
        product = hecke.qw_invert(Sign.MINUS, w) * hecke.dl_word(Sign.MINUS, w)

        # Assert
        assert product == QWElt.delta(group, ring, group.identity)

    @pytest.mark.parametrize("text, expected", [("+", Sign.PLUS), ("minus", Sign.MINUS), ("−", Sign.MINUS)])
    def test_sign_parse(self, text, expected):
        assert Sign.parse(text) == expected

    def test_sign_parse_invalid(self):
        with pytest.raises(ValidationError, match="Sinal inválido"):
            Sign.parse("0")


def random_coh_class(container, seed):
    rng = random.Random(seed)
    ring = container.coh_ring
    return LocClass.from_function(container.group, ring, lambda v: ring.random_laurent(rng, terms=2))


class TestGradedHeckeOperators:
    """
    Testes para π(s_i) e x_λ na cohomologia.
    """

    @pytest.mark.parametrize("fixture", ["container_a2", "container_b2"])
    @pytest.mark.parametrize("seed", [0, 1])
    def test_braid_relations(self, fixture, request, seed):
        """
        Testa π(s_i)π(s_j)··· = π(s_j)π(s_i)··· com m_ij fatores.
        """
        # Arrange
        container = request.getfixturevalue(fixture)
        f = random_coh_class(container, seed)

        # Act & Assert
        assert container.graded.braid_defects(f) == []

    def test_word_action_applies_rightmost_first(self, container_a2):
        # Arrange
        graded = container_a2.graded
        f = random_coh_class(container_a2, 3)

        # Act
        composed = graded.coh_word_action([0, 1], f)

        # Assert
        assert composed == graded.coh_hecke_s(0, graded.coh_hecke_s(1, f))

    @pytest.mark.parametrize("fixture", ["container_a2", "container_b2"])
    def test_chern_multiplications_commute(self, fixture, request):
        # Arrange
        container = request.getfixturevalue(fixture)
        f = random_coh_class(container, 5)

        # Act
        defect = container.graded.chern_commutation_defect((1, 0), (0, 1), f)

        # Assert
        assert defect.is_zero()
