"""
Serviço de construção de sistemas de raízes - Domain Layer

Monta a matriz de Cartan de um tipo finito simples e enumera raízes
positivas e corraízes pela ação das reflexões simples.

Aplicando princípios SOLID:
- SRP: Responsável apenas pela construção do dado de raízes
- OCP: Novos tipos são adicionados em _cartan_matrix
"""

import logging
from collections import deque
from typing import Dict, List, Tuple

from src.domain.entities.root_system import RootSystem, RootVector
from src.domain.exceptions import InvalidRootSystemError

logger = logging.getLogger(__name__)

# Ordem de W por tipo (usada apenas para o aviso de desempenho)
_WEYL_ORDER_LIMIT = 48

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _chain(rank: int) -> List[List[int]]:
    matrix = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        matrix[i][i + 1] = -1
        matrix[i + 1][i] = -1
    return matrix


def _cartan_matrix(type_label: str, rank: int) -> List[List[int]]:
    if type_label == "A":
        return _chain(rank)
    if type_label == "B":
        matrix = _chain(rank)
        # raiz final curta
        matrix[rank - 1][rank - 2] = -2
        return matrix
    if type_label == "C":
        matrix = _chain(rank)
        # raiz final longa
        matrix[rank - 2][rank - 1] = -2
        return matrix
    if type_label == "D":
        matrix = _chain(rank)
        matrix[rank - 2][rank - 1] = 0
        matrix[rank - 1][rank - 2] = 0
        matrix[rank - 3][rank - 1] = -1
        matrix[rank - 1][rank - 3] = -1
        return matrix
    if type_label == "E":
        matrix = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        edges = [(0, 2), (1, 3)] + [(k, k + 1) for k in range(2, rank - 1)]
        for i, j in edges:
            matrix[i][j] = -1
            matrix[j][i] = -1
        return matrix
    if type_label == "F":
        matrix = _chain(4)
        matrix[2][1] = -2
        return matrix
    # G2: α1 curta
    return [[2, -3], [-1, 2]]


def _enumerate_roots(cartan: List[List[int]]) -> Tuple[List[RootVector], Dict[RootVector, RootVector]]:
    """
    Enumera todas as raízes pela órbita das raízes simples.

    s_j age em coordenadas de raízes por c_j -= Σ_k A[j][k]c_k e em
    corraízes por d_j -= Σ_k A[k][j]d_k.
    """
    rank = len(cartan)
    coroot_of: Dict[RootVector, RootVector] = {}
    queue = deque()
    for i in range(rank):
        simple = tuple(1 if k == i else 0 for k in range(rank))
        coroot_of[simple] = simple
        queue.append(simple)

    while queue:
        root = queue.popleft()
        coroot = coroot_of[root]
        for j in range(rank):
            new_root = list(root)
            new_root[j] -= sum(cartan[j][k] * root[k] for k in range(rank))
            new_coroot = list(coroot)
            new_coroot[j] -= sum(cartan[k][j] * coroot[k] for k in range(rank))
            new_root, new_coroot = tuple(new_root), tuple(new_coroot)
            if new_root not in coroot_of:
                coroot_of[new_root] = new_coroot
                queue.append(new_root)

    positive = sorted(
        (root for root in coroot_of if all(c >= 0 for c in root)),
        key=lambda root: (sum(root), root),
    )
    return positive, {root: coroot_of[root] for root in positive}


class RootSystemBuilder:
    """
    Construtor de sistemas de raízes finitos simples.
    """

    def build(self, type_label: str, rank: int) -> RootSystem:
        """
        Constrói o sistema de raízes de um tipo finito.

        Args:
            type_label: Letra do tipo (A, B, C, D, E, F, G)
            rank: Posto

        Returns:
            RootSystem: Sistema com todos os campos preenchidos

        Raises:
            InvalidRootSystemError: Se o par (tipo, posto) não for um tipo finito válido
        """
        label = str(type_label).upper()
        if label not in VALID_RANKS or not isinstance(rank, int) or not VALID_RANKS[label](rank):
            raise InvalidRootSystemError(type_label, rank)

        cartan = _cartan_matrix(label, rank)
        positive, coroots = _enumerate_roots(cartan)
        root_system = RootSystem.from_cartan_matrix(label, cartan, positive, coroots)

        if label not in ("A", "B", "C", "G") or (label == "A" and rank > 3) or (label in ("B", "C") and rank > 3):
            logger.warning(
                f"{root_system.label} está fora do envelope garantido |W| <= {_WEYL_ORDER_LIMIT}; "
                "sem garantia de tempo de execução"
            )
        logger.debug(f"Sistema de raízes {root_system.label} construído com {len(positive)} raízes positivas")
        return root_system


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Atalho funcional para RootSystemBuilder().build."""
    return RootSystemBuilder().build(type_label, rank)
