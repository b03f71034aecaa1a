"""
Resolução de sistemas triangulares sobre classes localizadas.

Expande uma classe alvo numa família triangular {b_u}: alvo = Σ c_u b_u,
percorrendo os pontos fixos numa ordem em que b_u|_v = 0 para v posterior
a u e b_u|_u ≠ 0.
"""

import logging
from typing import Dict, Mapping, Sequence

from src.domain.entities.laurent_poly import RatFunc
from src.domain.entities.loc_class import LocClass
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import ConsistencyError

logger = logging.getLogger(__name__)


def expand_in_triangular_basis(
    target: LocClass,
    basis: Mapping[WeylElt, LocClass],
    order: Sequence[WeylElt],
    rule: str = "triangular-expansion",
) -> Dict[WeylElt, RatFunc]:
    """
    Coeficientes c_u com target = Σ c_u basis[u].

    Args:
        target: Classe a expandir
        basis: Família triangular indexada por W
        order: Ordem de eliminação; basis[u]|_v = 0 para v anterior a u
        rule: Nome da regra reportado em caso de resíduo

    Returns:
        Dict[WeylElt, RatFunc]: Coeficientes não nulos

    Raises:
        ConsistencyError: Se sobrar resíduo após a eliminação
    """
    residual = target
    coefficients: Dict[WeylElt, RatFunc] = {}
    for u in order:
        value = residual[u]
        if value.is_zero():
            continue
        pivot = basis[u][u]
        if pivot.is_zero():
            raise ConsistencyError(f"Pivô nulo em {u}", rule=rule)
        c = value / pivot
        coefficients[u] = c
        residual = residual - basis[u].scale(c)
    if not residual.is_zero():
        raise ConsistencyError(
            f"Resíduo não nulo na expansão triangular: {residual}", rule=rule
        )
    return coefficients
