"""
Testes para as baterias de verificação.
"""

import pytest

from src.application.services.verification_suite import (
    LONG_SUITE_THRESHOLD,
    Suite,
    VerificationSuite,
)
from src.domain.exceptions import ValidationError


class TestVerificationSuite:
    """
    Testes para VerificationSuite.
    """

    def test_all_suites_pass_in_a1(self, container_a1):
        # Arrange
        suite = VerificationSuite(container_a1, random_vectors=5)

        # Act
        report = suite.run("all")

        # Assert
        assert report.passed, report.failures()
        prefixes = {check.name.split(":")[0] for check in report.checks}
        assert prefixes == {s.value for s in Suite if s != Suite.ALL}

    @pytest.mark.parametrize("name", ["relations", "stab-k", "wall"])
    def test_light_suites_pass_in_b2(self, container_b2, name):
        # Arrange
        suite = VerificationSuite(container_b2, random_vectors=5)

        # Act
        report = suite.run(name)

        # Assert
        assert report.passed, report.failures()
        assert all(check.name.startswith(f"{name}:") for check in report.checks)

    @pytest.mark.slow
    def test_all_suites_pass_in_a2(self, container_a2):
        report = VerificationSuite(container_a2, random_vectors=10).run(Suite.ALL)
        assert report.passed, report.failures()

    def test_heavy_suites_are_skipped_above_threshold(self, container_a3):
        """
        Testa que |W| > 12 pula as baterias caras sem reprovar o relatório.
        """
        # Arrange
        suite = VerificationSuite(container_a3)

        # Act
        report = suite.run("csm")

        # Assert
        assert len(container_a3.group) > LONG_SUITE_THRESHOLD
        assert [check.name for check in report.checks] == ["csm:pulada"]
        assert report.checks[0].asserted is False
        assert report.passed is True

    def test_relations_include_graded_braid_and_commutation(self, container_b2):
        # Act
        report = VerificationSuite(container_b2, random_vectors=10).run("relations")

        # Assert
        names = {check.name: check.passed for check in report.checks}
        assert names["relations:trancas-graduadas"] is True
        assert names["relations:chern-comutam"] is True

    def test_report_is_deterministic(self, container_a1):
        # Act
        first = VerificationSuite(container_a1, seed=7, random_vectors=3).run("relations")
        second = VerificationSuite(container_a1, seed=7, random_vectors=3).run("relations")

        # Assert
        assert [(c.name, c.passed) for c in first.checks] == [(c.name, c.passed) for c in second.checks]

    def test_unknown_suite(self):
        with pytest.raises(ValidationError, match="Bateria desconhecida"):
            Suite.parse("schubert")
