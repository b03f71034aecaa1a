"""
Entidades QWElt e QHatWElt - Domain Layer

Elementos da álgebra de grupo torcida Q_W = Q ⋊ Z[W] com base à esquerda δ_w
e produto (p δ_u)(p' δ_v) = p·u(p') δ_{uv}. QHatWElt é a versão de duas
variáveis Q^y ⊗ Q^x_W: o produto torce apenas os caracteres x.
"""

from typing import Dict, Iterator, Mapping, Tuple, Union

from src.domain.entities.laurent_poly import CharacterRing, RatFunc, RingKind
from src.domain.entities.weyl_element import WeylElt
from src.domain.entities.weyl_group import WeylGroup
from src.domain.exceptions import ValidationError


class QWElt:
    """Σ p_w δ_w com suporte finito."""

    __slots__ = ("group", "ring", "_coeffs")

    def __init__(self, group: WeylGroup, ring: CharacterRing, coeffs: Mapping[WeylElt, RatFunc]):
        self.group = group
        self.ring = ring
        self._coeffs: Dict[WeylElt, RatFunc] = {w: c for w, c in coeffs.items() if not c.is_zero()}

    @classmethod
    def delta(cls, group: WeylGroup, ring: CharacterRing, w: WeylElt) -> "QWElt":
        return cls(group, ring, {w: ring.one})

    @classmethod
    def scalar(cls, group: WeylGroup, ring: CharacterRing, c: Union[RatFunc, int]) -> "QWElt":
        value = c if isinstance(c, RatFunc) else ring.const(c)
        return cls(group, ring, {group.identity: value})

    def _new(self, coeffs: Mapping[WeylElt, RatFunc]) -> "QWElt":
        return type(self)(self.group, self.ring, coeffs)

    def coefficient(self, w: WeylElt) -> RatFunc:
        return self._coeffs.get(w, self.ring.zero)

    def items(self) -> Iterator[Tuple[WeylElt, RatFunc]]:
        for w in self.group.elements:
            if w in self._coeffs:
                yield w, self._coeffs[w]

    def support(self) -> Tuple[WeylElt, ...]:
        return tuple(w for w, _ in self.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "QWElt") -> "QWElt":
        coeffs = dict(self._coeffs)
        for w, c in other._coeffs.items():
            coeffs[w] = coeffs[w] + c if w in coeffs else c
        return self._new(coeffs)

    def __sub__(self, other: "QWElt") -> "QWElt":
        return self + (-other)

    def __neg__(self) -> "QWElt":
        return self._new({w: -c for w, c in self._coeffs.items()})

    def left_scale(self, c: Union[RatFunc, int]) -> "QWElt":
        """c·z (coeficiente à esquerda, sem torção)."""
        return self._new({w: c * v for w, v in self._coeffs.items()})

    def __mul__(self, other: Union["QWElt", RatFunc, int]) -> "QWElt":
        if not isinstance(other, QWElt):
            # z·c = Σ p_u u(c) δ_u
            c = other if isinstance(other, RatFunc) else self.ring.const(other)
            return self._new({u: p * self.ring.weyl_act(u, c) for u, p in self._coeffs.items()})
        coeffs: Dict[WeylElt, RatFunc] = {}
        for u, p in self._coeffs.items():
            for v, p2 in other._coeffs.items():
                uv = self.group.multiply(u, v)
                term = p * self.ring.weyl_act(u, p2)
                coeffs[uv] = coeffs[uv] + term if uv in coeffs else term
        return self._new(coeffs)

    def __rmul__(self, other: Union[RatFunc, int]) -> "QWElt":
        return self.left_scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QWElt):
            return NotImplemented
        keys = set(self._coeffs) | set(other._coeffs)
        return all(self.coefficient(w) == other.coefficient(w) for w in keys)

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(f"({c})δ[{w}]" for w, c in self.items()) or "0"
        return f"{type(self).__name__}({body})"


class QHatWElt(QWElt):
    """
    Elemento de Q̂_W = Q^y ⊗ Q^x_W sobre o anel duplicado.

    As variáveis y comutam com tudo; δ^x_w age apenas nos caracteres x.
    """

    __slots__ = ()

    def __init__(self, group: WeylGroup, ring: CharacterRing, coeffs: Mapping[WeylElt, RatFunc]):
        if ring.kind != RingKind.DOUBLED:
            raise ValidationError("QHatWElt exige o anel duplicado", field="ring")
        super().__init__(group, ring, coeffs)
