"""
Testes para classes de Chern-Schwartz-MacPherson de células de Schubert.
"""

import pytest

from src.domain.exceptions import ValidationError
from src.domain.services.csm_classes import CellKind


class TestCSMClassServiceA1:
    """
    Em A1: c_SM(X(e)°) = (-α, 0) e c_SM(X(s)°) = (1, 1 + α).
    """

    def test_csm_of_cells(self, container_a1, a1_elements):
        # Arrange
        alpha = container_a1.coh_ring.linear_form((1,))
        e, s = a1_elements
        service = container_a1.csm

        # Act
        point, big_cell = service.csm_class(CellKind.X, e), service.csm_class(CellKind.X, s)

        # Assert
        assert point[e] == -alpha
        assert point[s].is_zero()
        assert big_cell[e] == 1
        assert big_cell[s] == 1 + alpha

    def test_expansion_in_schubert_basis(self, container_a1, a1_elements):
        """
        Testa c(s, s) = 1 + α e c(s, e) = 1.
        """
        # Arrange
        alpha = container_a1.coh_ring.linear_form((1,))
        e, s = a1_elements

        # Act
        expansion = container_a1.csm.csm_expand(CellKind.X, s)

        # Assert
        assert expansion[s] == 1 + alpha
        assert expansion[e] == 1
        assert container_a1.csm.csm_expand_nonequivariant(CellKind.X, s) == {s: 1, e: 1}

    def test_tangent_chern_class(self, container_a1, a1_elements):
        # Arrange
        alpha = container_a1.coh_ring.linear_form((1,))
        e, s = a1_elements

        # Act & Assert
        assert container_a1.csm.tangent_chern_class(e) == 1 - alpha
        assert container_a1.csm.tangent_chern_class(s) == 1 + alpha


class TestCSMClassService:
    """
    Positividade e aditividade em posto 2.
    """

    @pytest.mark.parametrize("fixture", ["container_a2", "container_b2"])
    def test_positivity(self, fixture, request):
        """
        Testa c(w,u) ≥ 0 no limite não equivariante, com diagonal 1.
        """
        # Arrange
        service = request.getfixturevalue(fixture).csm

        # Act
        report = service.positivity_report()

        # Assert
        assert report.passed, report.failures()

    @pytest.mark.parametrize("fixture", ["container_a1", "container_a2"])
    def test_additivity(self, fixture, request):
        """
        Testa Σ_w c_SM(célula(w)) = c(T𝔅) para as duas famílias de células.
        """
        # Arrange
        service = request.getfixturevalue(fixture).csm

        # Act & Assert
        assert service.additivity_defects() == {"X": [], "Y": []}

    def test_characteristic_cycle_signs(self, container_a2):
        # Arrange
        group = container_a2.group

        # Act
        signs = container_a2.csm.characteristic_cycle_signs()

        # Assert
        assert signs[group.longest] == 1
        assert signs[group.identity] == -1
        assert signs[group.simple(0)] == 1

    def test_cell_kind_parse(self):
        assert CellKind.parse("y°") == CellKind.Y
        with pytest.raises(ValidationError, match="Célula desconhecida"):
            CellKind.parse("Z")

    @pytest.mark.slow
    def test_positivity_a3(self, container_a3):
        report = container_a3.csm.positivity_report()
        assert report.passed, report.failures()
