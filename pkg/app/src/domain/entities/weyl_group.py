"""
Entidade WeylGroup - Domain Layer

Grupo de Weyl finito gerado por busca em largura no grafo de Cayley à
direita. Cada elemento guarda a palavra reduzida lexicograficamente mínima:
lexmin(w) = min_i (lexmin(w s_i) + i) sobre as descidas à direita i.

Aplicando princípios SOLID:
- SRP: Responsável pela estrutura de grupo (produto, inverso, palavras)
- DIP: Serviços (Bruhat, alcovas, Hecke) dependem desta abstração
"""

import logging
import re
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from src.domain.entities.root_system import RootSystem, RootVector
from src.domain.entities.weyl_element import Matrix, WeylElt
from src.domain.exceptions import NonReducedWordError, ParseError

logger = logging.getLogger(__name__)

_WORD_PATTERN = re.compile(r"^s(\d+)$")


def _identity(rank: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size))
        for i in range(size)
    )


class WeylGroup:
    """
    Grupo de Weyl de um sistema de raízes.

    Os elementos ficam ordenados por (comprimento, palavra canônica),
    que é a ordem de linhas e colunas de todas as matrizes exportadas.
    """

    def __init__(self, root_system: RootSystem):
        self.root_system = root_system
        self.rank = root_system.rank
        self._simple_weight = [self._simple_weight_matrix(i) for i in range(self.rank)]
        self._simple_root = [self._simple_root_matrix(i) for i in range(self.rank)]
        self._by_root_matrix: Dict[Matrix, WeylElt] = {}
        self.elements: Tuple[WeylElt, ...] = self._generate()
        self.identity = self.elements[0]
        self.longest = self.elements[-1]
        self._right: Dict[Tuple[WeylElt, int], WeylElt] = {}
        logger.debug(f"Grupo de Weyl de {root_system.label} gerado com {len(self.elements)} elementos")

    # ------------------------------------------------------------------
    # Construção
    # ------------------------------------------------------------------
    def _simple_weight_matrix(self, i: int) -> Matrix:
        cartan = self.root_system.cartan_matrix
        rows = [list(row) for row in _identity(self.rank)]
        # s_i λ = λ - λ_i α_i, com (α_i)_k = A[k][i]
        for k in range(self.rank):
            rows[k][i] -= cartan[k][i]
        return tuple(tuple(row) for row in rows)

    def _simple_root_matrix(self, i: int) -> Matrix:
        cartan = self.root_system.cartan_matrix
        rows = [list(row) for row in _identity(self.rank)]
        for j in range(self.rank):
            rows[i][j] -= cartan[i][j]
        return tuple(tuple(row) for row in rows)

    def _generate(self) -> Tuple[WeylElt, ...]:
        identity = WeylElt((), _identity(self.rank), _identity(self.rank), self)
        self._by_root_matrix[identity.root_matrix] = identity
        level = [identity]
        ordered = [identity]
        while level:
            candidates: Dict[Matrix, Tuple[Tuple[int, ...], Matrix]] = {}
            for w in level:
                for i in range(self.rank):
                    root_matrix = _matmul(w.root_matrix, self._simple_root[i])
                    if root_matrix in self._by_root_matrix:
                        continue
                    word = w.word + (i,)
                    best = candidates.get(root_matrix)
                    if best is None or word < best[0]:
                        candidates[root_matrix] = (word, _matmul(w.matrix, self._simple_weight[i]))
            level = []
            for root_matrix, (word, matrix) in sorted(candidates.items(), key=lambda item: item[1][0]):
                element = WeylElt(word, matrix, root_matrix, self)
                self._by_root_matrix[root_matrix] = element
                level.append(element)
            ordered.extend(level)
        return tuple(ordered)

    # ------------------------------------------------------------------
    # Estrutura de grupo
    # ------------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def simple(self, i: int) -> WeylElt:
        return self._by_root_matrix[self._simple_root[i]]

    def braid_order(self, i: int, j: int) -> int:
        """Ordem m_ij de s_i s_j."""
        step = self.multiply(self.simple(i), self.simple(j))
        current, order = step, 1
        while not current.is_identity:
            current = self.multiply(current, step)
            order += 1
        return order

    def multiply(self, u: WeylElt, v: WeylElt) -> WeylElt:
        return self._by_root_matrix[_matmul(u.root_matrix, v.root_matrix)]

    def times_simple(self, w: WeylElt, i: int) -> WeylElt:
        """w·s_i (multiplicação à direita)."""
        key = (w, i)
        if key not in self._right:
            self._right[key] = self._by_root_matrix[_matmul(w.root_matrix, self._simple_root[i])]
        return self._right[key]

    def simple_times(self, i: int, w: WeylElt) -> WeylElt:
        """s_i·w (multiplicação à esquerda)."""
        return self._by_root_matrix[_matmul(self._simple_root[i], w.root_matrix)]

    def inverse(self, w: WeylElt) -> WeylElt:
        return self.from_word(tuple(reversed(w.word)))

    def from_word(self, word: Iterable[int]) -> WeylElt:
        """Produto s_{i1}···s_{il} de uma palavra qualquer (0-indexada)."""
        element = self.identity
        for i in word:
            element = self.times_simple(element, i)
        return element

    def from_root_matrix(self, root_matrix: Matrix) -> WeylElt:
        return self._by_root_matrix[root_matrix]

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.from_word(word).length == len(word)

    def require_reduced(self, word: Sequence[int]) -> WeylElt:
        element = self.from_word(word)
        if element.length != len(word):
            raise NonReducedWordError(word)
        return element

    def is_right_descent(self, w: WeylElt, i: int) -> bool:
        return self.times_simple(w, i).length < w.length

    # ------------------------------------------------------------------
    # Raízes e reflexões
    # ------------------------------------------------------------------
    def inversions(self, w: WeylElt) -> List[RootVector]:
        """{α > 0 : wα < 0}; seu tamanho é ℓ(w)."""
        return [
            root for root in self.root_system.positive_roots
            if not self.root_system.is_positive(w.act_on_root(root))
        ]

    def left_inversions(self, w: WeylElt) -> List[RootVector]:
        """R(w) = {α > 0 : w^{-1}α < 0}."""
        return self.inversions(self.inverse(w))

    def reflection(self, root: RootVector) -> WeylElt:
        """Reflexão s_α: μ ↦ μ - ⟨μ, α^∨⟩α."""
        rs = self.root_system
        coroot = rs.coroot(tuple(root))
        columns = []
        for j in range(self.rank):
            image = list(rs.simple_root(j))
            pairing = rs.root_pairing(rs.simple_root(j), coroot)
            for k in range(self.rank):
                image[k] -= int(pairing) * root[k]
            columns.append(image)
        root_matrix = tuple(tuple(columns[j][i] for j in range(self.rank)) for i in range(self.rank))
        return self._by_root_matrix[root_matrix]

    def reflections(self) -> List[Tuple[RootVector, WeylElt]]:
        return [(root, self.reflection(root)) for root in self.root_system.positive_roots]

    # ------------------------------------------------------------------
    # Palavras
    # ------------------------------------------------------------------
    def reduced_words(self, w: WeylElt) -> List[Tuple[int, ...]]:
        """Todas as palavras reduzidas de w, em ordem lexicográfica."""
        return sorted(self._reduced_words(w))

    @lru_cache(maxsize=None)
    def _reduced_words(self, w: WeylElt) -> Tuple[Tuple[int, ...], ...]:
        if w.is_identity:
            return ((),)
        words = []
        for i in range(self.rank):
            if self.is_right_descent(w, i):
                words.extend(word + (i,) for word in self._reduced_words(self.times_simple(w, i)))
        return tuple(words)

    def reduced_subwords(self, word: Sequence[int]) -> Iterable[Tuple[int, ...]]:
        """Posições (índices) de subpalavras reduzidas de uma palavra."""
        for size in range(len(word) + 1):
            for positions in combinations(range(len(word)), size):
                if self.is_reduced([word[p] for p in positions]):
                    yield positions

    # ------------------------------------------------------------------
    # Serialização
    # ------------------------------------------------------------------
    def parse(self, text: str) -> WeylElt:
        """
        Interpreta "e" ou "s1.s2.s1" (índices 1-indexados).

        Raises:
            ParseError: Se o texto não seguir a gramática
        """
        cleaned = text.strip()
        if cleaned in ("e", "id", ""):
            return self.identity
        word = []
        for token in cleaned.split("."):
            match = _WORD_PATTERN.match(token.strip())
            if not match or not 1 <= int(match.group(1)) <= self.rank:
                raise ParseError(text, "palavra de Weyl")
            word.append(int(match.group(1)) - 1)
        return self.from_word(word)

    def format(self, w: WeylElt) -> str:
        return str(w)
