"""
Testes para politopos de Newton e o relatório de verificações.
"""

import random
from fractions import Fraction

import pytest

from src.domain.entities.polytope import Polytope
from src.domain.entities.verification_report import VerificationReport
from src.domain.exceptions import DegreeUndefinedError
from src.domain.services.polytope_service import (
    PolytopeService,
    in_convex_hull,
    in_convex_hull_by_simplices,
    vertices_of,
)


class TestPolytopeService:
    """
    Testes para o fecho convexo exato.
    """

    SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]

    @pytest.mark.parametrize(
        "target, inside",
        [((Fraction(1, 2), Fraction(1, 2)), True), ((1, 1), True), ((2, 0), False), ((Fraction(-1, 3), 0), False)],
    )
    def test_linear_program_matches_simplex_oracle(self, target, inside):
        # Act & Assert
        assert in_convex_hull(self.SQUARE, target) is inside
        assert in_convex_hull_by_simplices(self.SQUARE, target) is inside

    def test_vertices_drop_interior_points(self):
        # Act
        polytope = vertices_of(self.SQUARE + [(Fraction(1, 2), Fraction(1, 2))])

        # Assert
        assert len(polytope.vertices) == 4

    def test_newton_polytope_of_character_polynomial(self, container_a2):
        """
        Testa o politopo de (1 - e^{α1})(1 - e^{α2}).
        """
        # Arrange
        ring = container_a2.k_ring
        f = (1 - ring.character((1, 0))) * (1 - ring.character((0, 1))) * ring.q

        # Act
        polytope = PolytopeService().newton_polytope(f)

        # Assert
        assert polytope == Polytope(((0, 0), (0, 1), (1, 0), (1, 1)))

    def test_newton_polytope_of_zero(self, container_a2):
        with pytest.raises(DegreeUndefinedError, match="não está definido"):
            PolytopeService().newton_polytope(container_a2.k_ring.zero)

    def test_shift_containment(self):
        # Arrange
        service = PolytopeService()
        small = Polytope(((Fraction(1), Fraction(1)),))
        square = vertices_of(self.SQUARE)

        # Act & Assert
        assert service.polytope_shift_contains(small, square, (1, 0)) is True
        assert service.polytope_shift_contains(small, square, (-1, 0)) is False

    @pytest.mark.parametrize("seed", range(5))
    def test_newton_polytope_of_product_is_minkowski_sum(self, container_a2, seed):
        # Arrange
        service = PolytopeService()
        ring = container_a2.k_ring
        rng = random.Random(seed)
        f, g = ring.random_laurent(rng, spread=2), ring.random_laurent(rng, spread=2)

        # Act
        product = service.newton_polytope(f * g)

        # Assert
        assert product == service.minkowski_sum(service.newton_polytope(f), service.newton_polytope(g))

    def test_minkowski_sum_of_segments(self):
        # Arrange
        service = PolytopeService()
        horizontal = vertices_of([(0, 0), (1, 0)])
        vertical = vertices_of([(0, 0), (0, 1)])

        # Act
        total = service.minkowski_sum(horizontal, vertical)

        # Assert
        assert total == vertices_of(self.SQUARE)

    def test_degenerate_hull_and_repeated_points(self):
        """
        Testa pontos colineares, em que o programa linear tem soluções degeneradas.
        """
        # Arrange
        line = [(0, 0), (1, 1), (2, 2), (Fraction(1, 2), Fraction(1, 2))]

        # Act & Assert
        assert in_convex_hull(line, (Fraction(3, 2), Fraction(3, 2))) is True
        assert in_convex_hull(line, (1, 0)) is False
        assert vertices_of(line) == Polytope(((0, 0), (2, 2)))


class TestVerificationReport:
    """
    Testes para o agregador de vereditos.
    """

    def test_reported_checks_do_not_decide_verdict(self):
        # Arrange
        report = VerificationReport("teste")

        # Act
        report.add("afirmada", True)
        report.add("reportada", False, asserted=False)

        # Assert
        assert report.passed is True
        assert report.failures() == []
        assert report.summary() == "teste: 1/1 verificações aprovadas"

    def test_extend_with_prefix(self):
        # Arrange
        inner = VerificationReport("interno")
        inner.add("x", False)
        outer = VerificationReport("externo")

        # Act
        outer.extend(inner, prefix="p:")

        # Assert
        assert outer.passed is False
        assert [check.name for check in outer.failures()] == ["p:x"]
