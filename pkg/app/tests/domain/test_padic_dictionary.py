"""
Testes para a matriz de transição p-ádica e os testes GK e BNN.
"""

import pytest

from src.domain.exceptions import NotBruhatComparableError
from src.domain.services.padic_dictionary import PAdicDictionaryService


class TestPAdicDictionaryService:
    """
    Testes para PAdicDictionaryService.
    """

    def test_a1_entry(self, container_a1, a1_elements):
        """
        Testa m_{e,s} = (1 - q^{-1}e^α)/(1 - e^α) e a diagonal unitária.
        """
        # Arrange
        ring = container_a1.k_ring
        a = ring.character((1,))
        e, s = a1_elements

        # Act
        matrix = container_a1.padic.transition_matrix()

        # Assert
        assert matrix[(e, s)] == (1 - a / ring.q) / (1 - a)
        assert matrix[(e, e)] == 1
        assert matrix[(s, s)] == 1
        assert matrix[(s, e)].is_zero()

    @pytest.mark.parametrize("fixture", ["container_a2", "container_b2"])
    def test_unit_diagonal_and_gindikin_karpelevich(self, fixture, request):
        # Arrange
        service = request.getfixturevalue(fixture).padic

        # Act
        matrix = service.transition_matrix()

        # Assert
        assert matrix.is_unit_diagonal()
        assert service.gk_defects() == []

    @pytest.mark.slow
    def test_unit_diagonal_and_gindikin_karpelevich_in_g2(self, container_g2):
        # Arrange
        service = container_g2.padic

        # Act
        matrix = service.transition_matrix()

        # Assert
        assert len(container_g2.group) == 12
        assert matrix.is_unit_diagonal()
        assert service.gk_defects() == []

    def test_matrix_is_upper_triangular_in_bruhat_order(self, container_a2):
        # Arrange
        matrix = container_a2.padic.transition_matrix()
        bruhat = container_a2.bruhat

        # Act & Assert
        for u, w in matrix.support():
            assert bruhat.leq(u, w)

    def test_bnn_factorization_matches_smoothness_in_a2(self, container_a2):
        """
        Testa fatoração ⇔ suavidade e analiticidade para todos os pares de A2.
        """
        # Act
        table = container_a2.padic.bnn_table()

        # Assert
        assert len(table) == sum(len(container_a2.bruhat.below(w)) for w in container_a2.group.elements)
        for verdict in table:
            assert verdict.factorization == verdict.smooth
            assert verdict.analytic
            assert verdict.smoothness_label == "smooth"

    def test_bnn_label_in_non_simply_laced_type(self, container_b2):
        # Arrange
        group = container_b2.group

        # Act
        verdict = container_b2.padic.bnn_tests(group.identity, group.longest)

        # Assert
        assert verdict.smoothness_label == "rationally smooth"

    def test_bnn_requires_comparable_pair(self, container_a2):
        # Arrange
        group = container_a2.group

        # Act & Assert
        with pytest.raises(NotBruhatComparableError):
            container_a2.padic.bnn_tests(group.longest, group.identity)

    def test_dictionary_and_hecke_module(self, container_a2):
        """
        Testa Σ_{v≥u} φ_v = Σ_w m_{u,w} f_w e a ação de Hecke sobre φ_w.
        """
        # Arrange
        service = container_a2.padic

        # Act & Assert
        assert service.dictionary_defects() == []
        assert service.hecke_module_defects() == []

    @pytest.mark.parametrize("fixture", ["container_a1", "container_a2"])
    def test_fixed_point_classes_pair_to_upper_sets(self, fixture, request):
        """
        Testa ⟨stab⁺_x, Σ_w m_{u,w} F_w⟩ = q^{ℓ(x)/2}[u ≤ x].
        """
        # Arrange
        container = request.getfixturevalue(fixture)
        service = PAdicDictionaryService(container.stable_basis, container.bruhat)

        # Act & Assert
        assert service.dictionary_defects() == []

    def test_wrong_entry_breaks_dictionary(self, container_a1, a1_elements, mocker):
        # Arrange
        e, s = a1_elements
        service = PAdicDictionaryService(container_a1.stable_basis, container_a1.bruhat)
        entries = dict(service._raw_entries())
        entries[(e, s)] = entries[(e, s)] * container_a1.k_ring.q
        mocker.patch.object(service, "_raw_entries", return_value=entries)

        # Act
        defects = service.dictionary_defects()

        # Assert
        assert defects == [(e, s)]

    def test_fixed_point_class_is_supported_at_one_point(self, container_a1, a1_elements):
        # Arrange
        e, s = a1_elements

        # Act
        fixed = container_a1.padic.fixed_point_class(s)

        # Assert
        assert fixed.support() == (s,)

    @pytest.mark.slow
    def test_singular_pair_does_not_factor_in_a3(self, container_a3):
        """
        Testa que um par singular de A3 não fatora e que os demais pares seguem a suavidade.
        """
        # Act
        table = container_a3.padic.bnn_table()

        # Assert
        assert any(not verdict.smooth for verdict in table)
        assert all(verdict.factorization == verdict.smooth for verdict in table)
