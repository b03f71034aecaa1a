"""
Serviço de ordem de Bruhat - Domain Layer

Ordem de Bruhat pela propriedade de levantamento (equivalente à propriedade
de subpalavras), intervalos e o critério de suavidade racional por contagem
de reflexões.

Aplicando princípios SOLID:
- SRP: Responsável apenas pela combinatória da ordem de Bruhat
- DIP: Depende da abstração WeylGroup
"""

import logging
from typing import Dict, List, Tuple

from src.domain.entities.weyl_element import WeylElt
from src.domain.entities.weyl_group import WeylGroup
from src.domain.exceptions import NotBruhatComparableError

logger = logging.getLogger(__name__)


class BruhatOrder:
    """
    Ordem de Bruhat sobre um grupo de Weyl finito.
    """

    def __init__(self, group: WeylGroup):
        self.group = group
        self._cache: Dict[Tuple[WeylElt, WeylElt], bool] = {}

    def leq(self, u: WeylElt, w: WeylElt) -> bool:
        """
        Decide u ≤ w.

        Com s a última letra da palavra de w: se us < u então
        u ≤ w ⟺ us ≤ ws; caso contrário u ≤ w ⟺ u ≤ ws.
        """
        key = (u, w)
        if key in self._cache:
            return self._cache[key]
        if u.length > w.length:
            result = False
        elif u == w:
            result = True
        elif w.is_identity:
            result = False
        else:
            s = w.word[-1]
            ws = self.group.times_simple(w, s)
            us = self.group.times_simple(u, s)
            result = self.leq(us, ws) if us.length < u.length else self.leq(u, ws)
        self._cache[key] = result
        return result

    def leq_by_subwords(self, u: WeylElt, w: WeylElt) -> bool:
        """Oráculo por força bruta: u é produto de uma subpalavra reduzida da palavra de w."""
        word = w.word
        for positions in self.group.reduced_subwords(word):
            if len(positions) == u.length and self.group.from_word([word[p] for p in positions]) == u:
                return True
        return False

    def leq_by_inversions(self, u: WeylElt, w: WeylElt) -> bool:
        """Contenção de conjuntos de inversões R(u) ⊆ R(w) (ordem fraca, contida em Bruhat)."""
        return set(self.group.left_inversions(u)) <= set(self.group.left_inversions(w))

    def less(self, u: WeylElt, w: WeylElt) -> bool:
        return u != w and self.leq(u, w)

    def interval(self, lower: WeylElt, upper: WeylElt) -> List[WeylElt]:
        return [x for x in self.group.elements if self.leq(lower, x) and self.leq(x, upper)]

    def below(self, w: WeylElt) -> List[WeylElt]:
        return [x for x in self.group.elements if self.leq(x, w)]

    def above(self, w: WeylElt) -> List[WeylElt]:
        return [x for x in self.group.elements if self.leq(w, x)]

    def rationally_smooth_at(self, u: WeylElt, w: WeylElt) -> bool:
        """
        Suavidade racional de Y(u) no ponto fixo e_w.

        Y(u) = w₀·X(w₀u) e e_w corresponde a e_{w₀w}; X(y) é racionalmente
        suave em e_v sse #{t : x < tx ≤ y} = ℓ(y) - ℓ(x) para todo x em [v, y].

        Args:
            u: Índice da variedade de Schubert oposta
            w: Ponto fixo

        Returns:
            bool: Veredito de suavidade racional

        Raises:
            NotBruhatComparableError: Se u não for ≤ w
        """
        if not self.leq(u, w):
            raise NotBruhatComparableError(str(u), str(w))
        w0 = self.group.longest
        upper = self.group.multiply(w0, u)
        lower = self.group.multiply(w0, w)
        return self.schubert_rationally_smooth_at(upper, lower)

    def schubert_rationally_smooth_at(self, upper: WeylElt, lower: WeylElt) -> bool:
        """Critério de contagem de reflexões para X(upper) em e_lower."""
        reflections = [t for _, t in self.group.reflections()]
        for x in self.interval(lower, upper):
            count = 0
            for t in reflections:
                tx = self.group.multiply(t, x)
                if tx.length > x.length and self.leq(tx, upper):
                    count += 1
            if count != upper.length - x.length:
                logger.debug(f"X({upper}) não é racionalmente suave em e_{x}: {count} reflexões")
                return False
        return True
