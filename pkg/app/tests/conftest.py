"""
Fixtures compartilhadas pelos testes.

Os contêineres guardam em cache as famílias calculadas, por isso são
criados uma vez por sessão.
"""

import pytest

from src.infrastructure.startup.service_container import ServiceContainer


@pytest.fixture(scope="session")
def container_a1():
    return ServiceContainer("A", 1)


@pytest.fixture(scope="session")
def container_a2():
    return ServiceContainer("A", 2)


@pytest.fixture(scope="session")
def container_b2():
    return ServiceContainer("B", 2)


@pytest.fixture(scope="session")
def container_a3():
    """Usado apenas por testes marcados como slow."""
    return ServiceContainer("A", 3)


@pytest.fixture(scope="session")
def container_g2():
    """Usado apenas por testes marcados como slow."""
    return ServiceContainer("G", 2)


@pytest.fixture
def a1_elements(container_a1):
    group = container_a1.group
    return group.identity, group.simple(0)
