"""
Serviço de politopos de Newton - Domain Layer

Politopo de Newton da parte de caracteres de um polinômio de Laurent e
testes de contenção exatos por programação linear racional (simplex do
sympy sobre Rational).

Aplicando princípios SOLID:
- SRP: Responsável apenas pela geometria convexa exata
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence

import sympy
from sympy.solvers.simplex import linprog

from src.domain.entities.laurent_poly import RatFunc
from src.domain.entities.polytope import Point, Polytope
from src.domain.exceptions import DegreeUndefinedError

logger = logging.getLogger(__name__)


def _rational(value) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _feasible(columns: List[Sequence[Fraction]], rhs: Sequence[Fraction]) -> bool:
    """
    Decide se Ax = b, x ≥ 0 tem solução (A dada por colunas).

    Com as linhas orientadas para b ≥ 0, Ax = b tem solução sse o máximo de
    1ᵀAx sob Ax ≤ b, x ≥ 0 é 1ᵀb. A origem já é viável, então o simplex
    começa direto na fase de otimização.
    """
    rows, bound = [], []
    for i, b in enumerate(rhs):
        sign = -1 if b < 0 else 1
        rows.append([sign * _rational(column[i]) for column in columns])
        bound.append(sign * _rational(b))
    matrix = sympy.Matrix(rows)
    objective = [-sum(matrix[:, j]) for j in range(matrix.cols)]
    optimum, _ = linprog(objective, matrix, bound)
    return bool(-optimum == sum(bound))


def in_convex_hull(points: Sequence[Point], target: Sequence) -> bool:
    """target ∈ conv(points), decidido por programação linear exata."""
    if not points:
        return False
    columns = [list(p) + [Fraction(1)] for p in points]
    rhs = [Fraction(c) for c in target] + [Fraction(1)]
    return _feasible(columns, rhs)


def in_convex_hull_by_simplices(points: Sequence[Point], target: Sequence) -> bool:
    """
    Oráculo independente (Carathéodory): target está no fecho de algum
    subconjunto afimmente independente com no máximo d+1 pontos.
    """
    dim = len(target)
    for size in range(1, dim + 2):
        for subset in combinations(points, size):
            matrix = sympy.Matrix([[_rational(p[i]) for p in subset] for i in range(dim)] + [[1] * size])
            rhs = sympy.Matrix([_rational(c) for c in target] + [1])
            try:
                solution, params = matrix.gauss_jordan_solve(rhs)
            except ValueError:
                continue
            if params.shape[0]:
                continue
            if all(value >= 0 for value in solution):
                return True
    return False


def vertices_of(points: Sequence[Point]) -> Polytope:
    """Remove pontos redundantes (combinações convexas dos demais)."""
    unique = sorted(set(tuple(Fraction(c) for c in p) for p in points))
    vertices = [
        p for p in unique
        if not in_convex_hull([q for q in unique if q != p], p)
    ]
    return Polytope(tuple(vertices))


class PolytopeService:
    """
    Politopos de Newton e contenções P ⊆ Q + deslocamento.
    """

    def newton_polytope(self, f: RatFunc) -> Polytope:
        """
        Fecho convexo dos expoentes de caracteres de f (q, y e ħ projetados).

        Args:
            f: Polinômio de Laurent não nulo

        Returns:
            Polytope: Politopo de Newton

        Raises:
            DegreeUndefinedError: Se f = 0
            ValidationError: Se f não for polinômio de Laurent
        """
        if f.is_zero():
            raise DegreeUndefinedError()
        exponents = f.to_laurent().character_exponents()
        return vertices_of([tuple(Fraction(c) for c in e) for e in exponents])

    def polytope_shift_contains(self, inner: Polytope, outer: Polytope, shift: Sequence) -> bool:
        """Decide inner ⊆ outer + shift."""
        return all(
            in_convex_hull(outer.vertices, tuple(Fraction(a) - Fraction(b) for a, b in zip(vertex, shift)))
            for vertex in inner.vertices
        )

    def contains(self, polytope: Polytope, point: Sequence) -> bool:
        return in_convex_hull(polytope.vertices, point)

    def minkowski_sum(self, first: Polytope, second: Polytope) -> Polytope:
        return vertices_of([
            tuple(a + b for a, b in zip(p, q)) for p in first.vertices for q in second.vertices
        ])
