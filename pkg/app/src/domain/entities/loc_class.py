"""
Entidade LocClass - Domain Layer

Classe localizada: o vetor de restrições aos |W| pontos fixos do toro,
equivalentemente um elemento de Q_W^* na base f_w. Serve tanto para
K-teoria quanto para cohomologia (o formato vem do anel).
"""

from typing import Callable, Dict, Iterator, Mapping, Tuple, Union

from src.domain.entities.laurent_poly import CharacterRing, RatFunc
from src.domain.entities.weyl_element import WeylElt
from src.domain.entities.weyl_group import WeylGroup


class LocClass:
    """
    Vetor W → RatFunc; entradas ausentes são zero.

    O produto componente a componente reproduz f_w f_v = δ_{w,v} f_w.
    """

    __slots__ = ("group", "ring", "_values")

    def __init__(self, group: WeylGroup, ring: CharacterRing, values: Mapping[WeylElt, RatFunc]):
        self.group = group
        self.ring = ring
        self._values: Dict[WeylElt, RatFunc] = {w: v for w, v in values.items() if not v.is_zero()}

    @classmethod
    def fixed_point(cls, group: WeylGroup, ring: CharacterRing, w: WeylElt, value: RatFunc = None) -> "LocClass":
        """f_w (ou value·f_w)."""
        return cls(group, ring, {w: ring.one if value is None else value})

    @classmethod
    def unit(cls, group: WeylGroup, ring: CharacterRing) -> "LocClass":
        """𝟙 = Σ f_v."""
        return cls(group, ring, {w: ring.one for w in group.elements})

    @classmethod
    def from_function(cls, group: WeylGroup, ring: CharacterRing, fn: Callable[[WeylElt], RatFunc]) -> "LocClass":
        return cls(group, ring, {w: fn(w) for w in group.elements})

    def __getitem__(self, w: WeylElt) -> RatFunc:
        return self._values.get(w, self.ring.zero)

    def items(self) -> Iterator[Tuple[WeylElt, RatFunc]]:
        for w in self.group.elements:
            yield w, self[w]

    def support(self) -> Tuple[WeylElt, ...]:
        return tuple(w for w in self.group.elements if w in self._values)

    def is_zero(self) -> bool:
        return not self._values

    def map(self, fn: Callable[[WeylElt, RatFunc], RatFunc]) -> "LocClass":
        return LocClass(self.group, self.ring, {w: fn(w, value) for w, value in self.items()})

    def with_ring(self, ring: CharacterRing, fn: Callable[[RatFunc], RatFunc]) -> "LocClass":
        return LocClass(self.group, ring, {w: fn(value) for w, value in self._values.items()})

    def weyl_act(self, w: WeylElt) -> "LocClass":
        """Ação de W à esquerda: (w·f)(v) = w(f(w^{-1}v))."""
        w_inv = self.group.inverse(w)
        return LocClass.from_function(
            self.group, self.ring, lambda v: self.ring.weyl_act(w, self[self.group.multiply(w_inv, v)])
        )

    def __add__(self, other: "LocClass") -> "LocClass":
        return LocClass(self.group, self.ring, {w: self[w] + other[w] for w in self.group.elements})

    def __sub__(self, other: "LocClass") -> "LocClass":
        return LocClass(self.group, self.ring, {w: self[w] - other[w] for w in self.group.elements})

    def __neg__(self) -> "LocClass":
        return LocClass(self.group, self.ring, {w: -v for w, v in self._values.items()})

    def scale(self, c: Union[RatFunc, int]) -> "LocClass":
        """Multiplica todas as entradas pelo mesmo escalar."""
        return LocClass(self.group, self.ring, {w: c * v for w, v in self._values.items()})

    def __mul__(self, other: Union["LocClass", RatFunc, int]) -> "LocClass":
        if isinstance(other, LocClass):
            return LocClass(self.group, self.ring, {w: v * other[w] for w, v in self._values.items()})
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocClass):
            return NotImplemented
        return all(self[w] == other[w] for w in self.group.elements)

    __hash__ = None

    def __repr__(self) -> str:
        entries = ", ".join(f"{w}: {v}" for w, v in self.items() if not v.is_zero())
        return f"LocClass({{{entries}}})"
