"""
Testes para a ordem de Bruhat e a suavidade racional.
"""

import pytest

from src.domain.exceptions import NotBruhatComparableError


class TestBruhatOrder:
    """
    Testes para BruhatOrder.
    """

    @pytest.mark.parametrize("fixture", ["container_a2", "container_b2"])
    def test_leq_matches_subword_oracle(self, fixture, request):
        """
        Testa a recursão contra o oráculo por subpalavras.
        """
        # Arrange
        container = request.getfixturevalue(fixture)
        bruhat, group = container.bruhat, container.group

        # Act & Assert
        for u in group.elements:
            for w in group.elements:
                assert bruhat.leq(u, w) == bruhat.leq_by_subwords(u, w)

    def test_weak_order_is_contained_in_bruhat(self, container_a2):
        """
        Testa que R(u) ⊆ R(w) implica u ≤ w.
        """
        # Arrange
        bruhat, group = container_a2.bruhat, container_a2.group

        # Act & Assert
        for u in group.elements:
            for w in group.elements:
                if bruhat.leq_by_inversions(u, w):
                    assert bruhat.leq(u, w)

    def test_bruhat_is_strictly_larger_than_weak_order(self, container_a2):
        """
        Testa s1 ≤ s2s1 em Bruhat sem contenção de inversões.
        """
        # Arrange
        group, bruhat = container_a2.group, container_a2.bruhat
        s1 = group.simple(0)
        s2s1 = group.from_word((1, 0))

        # Act & Assert
        assert bruhat.leq(s1, s2s1) is True
        assert bruhat.leq_by_inversions(s1, s2s1) is False

    def test_interval_below_and_above(self, container_a2):
        """
        Testa os intervalos extremos.
        """
        # Arrange
        group, bruhat = container_a2.group, container_a2.bruhat

        # Act & Assert
        assert bruhat.below(group.longest) == list(group.elements)
        assert bruhat.above(group.identity) == list(group.elements)
        assert bruhat.interval(group.simple(0), group.simple(1)) == []

    def test_all_schubert_varieties_of_a2_are_smooth(self, container_a2):
        """
        Testa que em A2 todo Y(u) é suave em todo e_w com u ≤ w.
        """
        # Arrange
        group, bruhat = container_a2.group, container_a2.bruhat

        # Act & Assert
        for w in group.elements:
            for u in bruhat.below(w):
                assert bruhat.rationally_smooth_at(u, w) is True

    def test_smoothness_requires_comparable_pair(self, container_a2):
        """
        Testa que u ≰ w levanta NotBruhatComparableError.
        """
        # Arrange
        group = container_a2.group

        # Act & Assert
        with pytest.raises(NotBruhatComparableError):
            container_a2.bruhat.rationally_smooth_at(group.simple(0), group.simple(1))

    @pytest.mark.slow
    def test_singular_schubert_variety_in_a3(self, container_a3):
        """
        Testa que X(s2s1s3s2) é singular no ponto e.
        """
        # Arrange
        group = container_a3.group
        upper = group.from_word((1, 0, 2, 1))

        # Act & Assert
        assert container_a3.bruhat.schubert_rationally_smooth_at(upper, group.identity) is False
        assert container_a3.bruhat.schubert_rationally_smooth_at(upper, upper) is True
