"""
Montagem dos serviços para um sistema de raízes - Infrastructure Layer

Aplicando o princípio Dependency Inversion Principle (DIP) -
os serviços recebem suas dependências prontas; este módulo é o único
lugar que decide as implementações concretas.
"""

import logging
from functools import cached_property
from typing import Optional

from src.domain.entities.laurent_poly import CharacterRing, RingKind
from src.domain.entities.weyl_group import WeylGroup
from src.domain.ports.stab_family_repository import StabFamilyRepository
from src.domain.services.alcove_service import AlcoveService
from src.domain.services.axiom_checker import AxiomChecker
from src.domain.services.bruhat_order import BruhatOrder
from src.domain.services.cohomological_stable_basis import CohomologicalStableBasisService
from src.domain.services.csm_classes import CSMClassService
from src.domain.services.graded_hecke import GradedHeckeOperators
from src.domain.services.hecke_algebra import HeckeAlgebra
from src.domain.services.k_stable_basis import KStableBasisService
from src.domain.services.motivic_chern import MotivicChernService
from src.domain.services.padic_dictionary import PAdicDictionaryService
from src.domain.services.polytope_service import PolytopeService
from src.domain.services.root_polynomials import RootPolynomialService
from src.domain.services.root_system_builder import build_root_system
from src.domain.services.stable_families import StableFamilyService
from src.infrastructure.driven.in_memory_stab_family_repository import InMemoryStabFamilyRepository

logger = logging.getLogger(__name__)


class ServiceContainer:
    """
    Serviços de um sistema de raízes, construídos sob demanda.

    Raises:
        InvalidRootSystemError: Na construção, para (tipo, posto) inválidos
    """

    def __init__(self, type_label: str, rank: int, repository: Optional[StabFamilyRepository] = None):
        self.root_system = build_root_system(type_label, rank)
        self.group = WeylGroup(self.root_system)
        self.bruhat = BruhatOrder(self.group)
        self.repository = repository or InMemoryStabFamilyRepository()
        logger.debug(f"Contêiner criado para {self.root_system.label} com |W| = {len(self.group)}")

    @cached_property
    def k_ring(self) -> CharacterRing:
        return CharacterRing(self.root_system, RingKind.K_THEORY)

    @cached_property
    def coh_ring(self) -> CharacterRing:
        return CharacterRing(self.root_system, RingKind.COHOMOLOGY)

    @cached_property
    def doubled_ring(self) -> CharacterRing:
        return CharacterRing(self.root_system, RingKind.DOUBLED)

    @cached_property
    def hecke(self) -> HeckeAlgebra:
        return HeckeAlgebra(self.group, self.k_ring)

    @cached_property
    def doubled_hecke(self) -> HeckeAlgebra:
        return HeckeAlgebra(self.group, self.doubled_ring)

    @cached_property
    def alcoves(self) -> AlcoveService:
        return AlcoveService(self.group)

    @cached_property
    def polytopes(self) -> PolytopeService:
        return PolytopeService()

    @cached_property
    def stable_basis(self) -> KStableBasisService:
        return KStableBasisService(self.group, self.k_ring, self.hecke, self.bruhat)

    @cached_property
    def families(self) -> StableFamilyService:
        return StableFamilyService(self.stable_basis, self.hecke, self.bruhat, self.alcoves, self.repository)

    @cached_property
    def axioms(self) -> AxiomChecker:
        return AxiomChecker(self.families, self.polytopes)

    @cached_property
    def root_polynomials(self) -> RootPolynomialService:
        return RootPolynomialService(self.doubled_hecke, self.stable_basis)

    @cached_property
    def graded(self) -> GradedHeckeOperators:
        return GradedHeckeOperators(self.group, self.coh_ring)

    @cached_property
    def cohomology(self) -> CohomologicalStableBasisService:
        return CohomologicalStableBasisService(self.group, self.coh_ring, self.bruhat, self.graded)

    @cached_property
    def csm(self) -> CSMClassService:
        return CSMClassService(self.cohomology)

    @cached_property
    def motivic(self) -> MotivicChernService:
        return MotivicChernService(self.stable_basis, self.bruhat)

    @cached_property
    def padic(self) -> PAdicDictionaryService:
        return PAdicDictionaryService(self.stable_basis, self.bruhat)
