"""
Testes para stab± em cohomologia e classes de Schubert.
"""

import pytest

from src.domain.exceptions import NonReducedWordError, ValidationError
from src.domain.services.cohomological_stable_basis import CohomologicalStableBasisService
from src.domain.services.hecke_algebra import Sign


class TestCohomologicalStableBasisA1:
    """
    Valores explícitos em A1: stab₋(e) = (α-ħ, -ħ), stab₋(s) = (0, -α),
    stab₊(e) = (α, 0), stab₊(s) = (-ħ, -α-ħ).
    """

    @pytest.fixture
    def forms(self, container_a1):
        ring = container_a1.coh_ring
        return ring.linear_form((1,)), ring.hbar

    def test_stab_minus(self, container_a1, forms, a1_elements):
        # Arrange
        alpha, hbar = forms
        e, s = a1_elements
        service = container_a1.cohomology

        # Act
        stab_e, stab_s = service.stab_minus_coh(e), service.stab_minus_coh(s)

        # Assert
        assert stab_e[e] == alpha - hbar
        assert stab_e[s] == -hbar
        assert stab_s[e].is_zero()
        assert stab_s[s] == -alpha

    def test_stab_plus(self, container_a1, forms, a1_elements):
        # Arrange
        alpha, hbar = forms
        e, s = a1_elements
        service = container_a1.cohomology

        # Act
        stab_e, stab_s = service.stab_plus_coh(e), service.stab_plus_coh(s)

        # Assert
        assert stab_e[e] == alpha
        assert stab_e[s].is_zero()
        assert stab_s[e] == -hbar
        assert stab_s[s] == -alpha - hbar

    def test_stab_coh_dispatches_on_sign(self, container_a1, a1_elements):
        # Arrange
        e, _ = a1_elements
        service = container_a1.cohomology

        # Act & Assert
        assert service.stab_coh("+", e) == service.stab_plus_coh(e)
        assert service.stab_coh(Sign.MINUS, e) == service.stab_minus_coh(e)

    def test_schubert_classes(self, container_a1, forms, a1_elements):
        """
        Testa [Y(s)] = (0, α) e [X(e)] = (-α, 0).
        """
        # Arrange
        alpha, _ = forms
        e, s = a1_elements
        service = container_a1.cohomology

        # Act
        y_s, x_e = service.schubert_y(s), service.schubert_x(e)

        # Assert
        assert y_s[e].is_zero()
        assert y_s[s] == alpha
        assert x_e[e] == -alpha
        assert x_e[s].is_zero()

    def test_requires_cohomology_ring(self, container_a1):
        # Act & Assert
        with pytest.raises(ValidationError, match="anel de cohomologia"):
            CohomologicalStableBasisService(
                container_a1.group, container_a1.k_ring, container_a1.bruhat, container_a1.graded
            )


class TestCohomologicalStableBasis:
    """
    Testes estruturais em posto 2.
    """

    @pytest.mark.parametrize("fixture", ["container_a2", "container_b2"])
    def test_restriction_does_not_depend_on_reduced_word(self, fixture, request):
        # Arrange
        service = request.getfixturevalue(fixture).cohomology

        # Act & Assert
        assert service.word_independence_defects() == []

    @pytest.mark.parametrize("fixture", ["container_a1", "container_a2", "container_b2"])
    def test_duality(self, fixture, request):
        # Arrange
        service = request.getfixturevalue(fixture).cohomology

        # Act & Assert
        assert service.duality_defects() == []

    def test_graded_hecke_action(self, container_a2):
        """
        Testa π(s_i)stab±(w) = -stab±(ws_i).
        """
        # Arrange
        service = container_a2.cohomology

        # Act & Assert
        assert service.cohaction_defects() == []

    def test_off_diagonal_entries_divisible_by_hbar(self, container_b2):
        assert container_b2.cohomology.hbar_divisibility_defects() == []

    @pytest.mark.parametrize("fixture", ["container_a2", "container_b2"])
    def test_billey_limit_and_schubert_routes(self, fixture, request):
        """
        Testa o limite ħ → ∞ e as duas construções de [X(w)].
        """
        # Arrange
        container = request.getfixturevalue(fixture)
        service = container.cohomology

        # Act & Assert
        assert service.schubert_route_defects() == []
        for w in container.group.elements:
            assert service.billey_limit_check(w)
            assert service.stab_minus_coh(w)[w] == service.minus_diagonal(w)

    def test_explicit_word_must_be_reduced(self, container_a2):
        # Arrange
        group = container_a2.group

        # Act & Assert
        with pytest.raises(NonReducedWordError):
            container_a2.cohomology.restriction_minus(group.identity, group.longest, (0, 1, 1))
