"""
Entidades de aritmética exata - Domain Layer

CharacterRing, RatFunc e LaurentPoly: polinômios de Laurent em caracteres e^λ
(λ em coordenadas de raízes simples) e q^{1/2}, polinômios em variáveis de
raízes e ħ para cohomologia, e seus corpos de frações.

A aritmética é delegada ao corpo de frações racionais de sympy.polys sobre QQ,
que mantém numerador e denominador reduzidos. Expoentes negativos vivem em
denominadores monomiais; a forma de Laurent é recuperada na serialização.

Três formatos de anel:
- K_THEORY:   geradores a1..ar (e^{α_i}), t (q^{1/2}), y
- COHOMOLOGY: geradores a1..ar (formas lineares α_i), h (ħ)
- DOUBLED:    geradores a1..ar (caracteres x), b1..br (caracteres y), t

Aplicando princípios SOLID:
- SRP: Responsável apenas pela aritmética exata e suas involuções
- OCP: Novos formatos de anel entram por RingKind
"""

import logging
import random
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.fields import field as fraction_field

from src.domain.entities.root_system import RootSystem
from src.domain.entities.weyl_element import WeylElt
from src.domain.exceptions import ParseError, ValidationError

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


class RingKind(str, Enum):
    """Formato do anel de coeficientes."""
    K_THEORY = "k-theory"
    COHOMOLOGY = "cohomology"
    DOUBLED = "doubled"


def _qq(value):
    """Converte int/Fraction para um elemento de QQ."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return value


def _fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


class CharacterRing:
    """
    Anel de coeficientes exatos associado a um sistema de raízes.

    Elementos são RatFunc; a igualdade é decidida por multiplicação cruzada.
    """

    def __init__(self, root_system: RootSystem, kind: RingKind = RingKind.K_THEORY):
        self.root_system = root_system
        self.kind = RingKind(kind)
        rank = root_system.rank
        names = [f"a{i + 1}" for i in range(rank)]
        if self.kind == RingKind.K_THEORY:
            names += ["t", "y"]
        elif self.kind == RingKind.COHOMOLOGY:
            names += ["h"]
        else:
            names += [f"b{i + 1}" for i in range(rank)] + ["t"]
        self.names = tuple(names)
        built = fraction_field(",".join(names), QQ)
        self._field = built[0]
        self._gens = built[1:]
        self._ring = self._field.ring
        self.ngens = len(names)
        self.rank = rank
        self.char_slots = tuple(range(rank))
        self.dual_slots = tuple(range(rank, 2 * rank)) if self.kind == RingKind.DOUBLED else ()
        self.t_slot = names.index("t") if "t" in names else None
        self.y_slot = names.index("y") if "y" in names else None
        self.h_slot = names.index("h") if "h" in names else None
        self.one = RatFunc(self, self._field.one)
        self.zero = RatFunc(self, self._field.zero)

    # ------------------------------------------------------------------
    # Construtores
    # ------------------------------------------------------------------
    def wrap(self, frac) -> "RatFunc":
        return RatFunc(self, frac)

    def const(self, value: Scalar) -> "RatFunc":
        return RatFunc(self, self._field(_qq(value)))

    def from_terms(self, terms: Dict[Exponents, object]) -> "RatFunc":
        """Elemento a partir de um mapa expoente → coeficiente (expoentes podem ser negativos)."""
        return RatFunc(self, self._frac_from_terms(terms))

    def monomial(self, exponents: Dict[int, int], coeff: Scalar = 1) -> "RatFunc":
        key = [0] * self.ngens
        for slot, exp in exponents.items():
            key[slot] += exp
        return self.from_terms({tuple(key): _qq(coeff)})

    def character(self, mu: Sequence[int]) -> "RatFunc":
        """e^μ (caracteres x no anel duplicado)."""
        self._require(RingKind.K_THEORY, RingKind.DOUBLED)
        return self.monomial({slot: int(c) for slot, c in zip(self.char_slots, mu)})

    def dual_character(self, mu: Sequence[int]) -> "RatFunc":
        """e^μ nas variáveis y do anel duplicado."""
        self._require(RingKind.DOUBLED)
        return self.monomial({slot: int(c) for slot, c in zip(self.dual_slots, mu)})

    def q_power(self, half_exponent: int) -> "RatFunc":
        """q^{n/2}."""
        self._require(RingKind.K_THEORY, RingKind.DOUBLED)
        return self.monomial({self.t_slot: half_exponent})

    @property
    def q(self) -> "RatFunc":
        return self.q_power(2)

    @property
    def y(self) -> "RatFunc":
        self._require(RingKind.K_THEORY)
        return self.monomial({self.y_slot: 1})

    @property
    def hbar(self) -> "RatFunc":
        self._require(RingKind.COHOMOLOGY)
        return self.monomial({self.h_slot: 1})

    def linear_form(self, mu: Sequence) -> "RatFunc":
        """Σ μ_i α_i como forma linear no anel de cohomologia."""
        self._require(RingKind.COHOMOLOGY)
        total = self._ring.zero
        for i, c in enumerate(mu):
            if c:
                total += self._ring.gens[i].mul_ground(_qq(Fraction(c)))
        return RatFunc(self, self._field(total))

    def _require(self, *kinds: RingKind) -> None:
        if self.kind not in kinds:
            raise ValidationError(f"Operação indisponível no anel {self.kind.value}", field="kind")

    def _frac_from_terms(self, terms: Dict[Exponents, object]):
        terms = {tuple(m): _qq(c) for m, c in terms.items() if c}
        if not terms:
            return self._field.zero
        shift = [max(0, -min(m[k] for m in terms)) for k in range(self.ngens)]
        numer = self._ring.from_dict({
            tuple(m[k] + shift[k] for k in range(self.ngens)): c for m, c in terms.items()
        })
        if not any(shift):
            return self._field(numer)
        denom = self._ring.from_dict({tuple(shift): QQ.one})
        return self._field(numer) / self._field(denom)

    # ------------------------------------------------------------------
    # Homomorfismos
    # ------------------------------------------------------------------
    def map_monomials(
        self,
        f: "RatFunc",
        fn: Callable[[Exponents], Tuple[Exponents, int]],
        target: Optional["CharacterRing"] = None,
    ) -> "RatFunc":
        """
        Aplica um homomorfismo monomial: cada monômio x^m vai a ±x^{m'}.

        Args:
            f: Elemento de origem
            fn: Função m ↦ (m', sinal)
            target: Anel de destino (por padrão o próprio anel)

        Returns:
            RatFunc: Imagem em target
        """
        target = target or self
        numer = target._frac_from_terms(self._mapped_terms(f.frac.numer, fn))
        denom = target._frac_from_terms(self._mapped_terms(f.frac.denom, fn))
        return RatFunc(target, numer / denom)

    @staticmethod
    def _mapped_terms(poly, fn) -> Dict[Exponents, object]:
        out: Dict[Exponents, object] = {}
        for monom, coeff in poly.items():
            new, sign = fn(monom)
            value = coeff if sign == 1 else -coeff
            out[new] = out.get(new, QQ.zero) + value
        return out

    def weyl_act(self, w: WeylElt, f: "RatFunc") -> "RatFunc":
        """
        Ação de W: e^λ ↦ e^{wλ} (q e y fixos); na cohomologia λ ↦ wλ com ħ fixo.

        No anel duplicado apenas os caracteres x são movidos.
        """
        if w.is_identity:
            return f
        if self.kind == RingKind.COHOMOLOGY:
            images = []
            for i in range(self.rank):
                column = [w.root_matrix[k][i] for k in range(self.rank)]
                image = self._ring.zero
                for k, c in enumerate(column):
                    if c:
                        image += self._ring.gens[k].mul_ground(QQ(c))
                images.append((self._ring.gens[i], image))
            numer = f.frac.numer.compose(images)
            denom = f.frac.denom.compose(images)
            return RatFunc(self, self._field(numer) / self._field(denom))

        matrix = w.root_matrix
        rank = self.rank

        def act(monom: Exponents) -> Tuple[Exponents, int]:
            chars = monom[:rank]
            moved = tuple(sum(matrix[i][j] * chars[j] for j in range(rank)) for i in range(rank))
            return moved + tuple(monom[rank:]), 1

        return self.map_monomials(f, act)

    def bar(self, f: "RatFunc") -> "RatFunc":
        """Involução barra: e^λ ↦ e^{-λ}, q^{1/2} ↦ q^{-1/2}, y ↦ y^{-1}."""
        self._require(RingKind.K_THEORY, RingKind.DOUBLED)
        return self.map_monomials(f, lambda m: (tuple(-e for e in m), 1))

    def invert_characters(self, f: "RatFunc") -> "RatFunc":
        """e^λ ↦ e^{-λ} mantendo q e y."""
        self._require(RingKind.K_THEORY, RingKind.DOUBLED)
        slots = set(self.char_slots) | set(self.dual_slots)
        return self.map_monomials(
            f, lambda m: (tuple(-e if k in slots else e for k, e in enumerate(m)), 1)
        )

    def to_y_variable(self, f: "RatFunc") -> "RatFunc":
        """
        Troca q por y = -q^{-1}: q^k ↦ (-1)^k y^{-k}.

        Raises:
            ValidationError: Se aparecer potência semi-inteira de q
        """
        self._require(RingKind.K_THEORY)
        t_slot, y_slot = self.t_slot, self.y_slot

        def convert(monom: Exponents) -> Tuple[Exponents, int]:
            if monom[t_slot] % 2:
                raise ValidationError("Potência semi-inteira de q não admite a troca para y", field="variable")
            k = monom[t_slot] // 2
            new = list(monom)
            new[t_slot] = 0
            new[y_slot] -= k
            return tuple(new), -1 if k % 2 else 1

        return self.map_monomials(f, convert)

    def substitute(self, f: "RatFunc", slot: int, value: Scalar) -> "RatFunc":
        """
        Especializa um gerador em um valor racional.

        Raises:
            ValidationError: Se o denominador se anular
        """
        gen = self._ring.gens[slot]
        numer = f.frac.numer.subs(gen, _qq(value))
        denom = f.frac.denom.subs(gen, _qq(value))
        if not denom:
            raise ValidationError(
                f"Substituição {self.names[slot]}={value} anula um denominador", field="substitutions"
            )
        return RatFunc(self, self._field(numer) / self._field(denom))

    def slot_coefficient(self, f: "RatFunc", slot: int, degree: int) -> "RatFunc":
        """
        Coeficiente de x_slot^degree em f, visto como polinômio nesse gerador.

        Raises:
            ValidationError: Se f não for polinomial
        """
        terms = dict(LaurentPoly.from_ratfunc(f).terms)
        picked = {}
        for monom, coeff in terms.items():
            if monom[slot] == degree:
                key = list(monom)
                key[slot] = 0
                picked[tuple(key)] = coeff
        return self.from_terms(picked)

    def slot_of(self, name: str) -> int:
        aliases = {"q": "t", "ħ": "h", "hbar": "h"}
        key = aliases.get(name, name)
        if key not in self.names:
            raise ValidationError(f"Variável desconhecida '{name}'", field="substitutions")
        return self.names.index(key)

    # ------------------------------------------------------------------
    # Forma canônica e serialização
    # ------------------------------------------------------------------
    def canonical_parts(self, f: "RatFunc") -> Tuple[Dict[Exponents, Fraction], Dict[Exponents, Fraction]]:
        """
        Forma canônica (N, D): N de Laurent, D polinomial sem conteúdo monomial,
        com o primeiro termo de D (ordem crescente de expoentes) de coeficiente 1.
        """
        numer, denom = f.frac.numer, f.frac.denom
        if not numer:
            return {}, {tuple([0] * self.ngens): Fraction(1)}
        content = [min(m[k] for m in denom.keys()) for k in range(self.ngens)]
        denom_terms = {
            tuple(m[k] - content[k] for k in range(self.ngens)): _fraction(c) for m, c in denom.items()
        }
        lead = denom_terms[min(denom_terms)]
        denom_terms = {m: c / lead for m, c in denom_terms.items()}
        numer_terms = {
            tuple(m[k] - content[k] for k in range(self.ngens)): _fraction(c) / lead for m, c in numer.items()
        }
        return numer_terms, denom_terms

    def serialize(self, f: "RatFunc") -> str:
        numer, denom = self.canonical_parts(f)
        if not numer:
            return "0"
        numer_text = self._format_terms(numer)
        if len(denom) == 1 and not any(next(iter(denom))):
            return numer_text
        return f"({numer_text})/({self._format_terms(denom)})"

    def _format_terms(self, terms: Dict[Exponents, Fraction]) -> str:
        pieces: List[str] = []
        for monom in sorted(terms):
            text = self._format_term(monom, terms[monom])
            if not pieces:
                pieces.append(text)
            elif text.startswith("-"):
                pieces.append(f" - {text[1:]}")
            else:
                pieces.append(f" + {text}")
        return "".join(pieces)

    def _format_term(self, monom: Exponents, coeff: Fraction) -> str:
        factors = self._format_monomial(monom)
        if not factors:
            return str(coeff)
        body = "*".join(factors)
        if coeff == 1:
            return body
        if coeff == -1:
            return f"-{body}"
        return f"{coeff}*{body}"

    def _format_monomial(self, monom: Exponents) -> List[str]:
        factors: List[str] = []
        chars = monom[:self.rank]
        if self.kind == RingKind.COHOMOLOGY:
            for i, e in enumerate(chars):
                if e:
                    factors.append(f"a{i + 1}" if e == 1 else f"a{i + 1}^{{{e}}}")
            h = monom[self.h_slot]
            if h:
                factors.append("h" if h == 1 else f"h^{{{h}}}")
            return factors
        if any(chars):
            factors.append(f"e[{','.join(str(c) for c in chars)}]")
        if self.kind == RingKind.DOUBLED:
            duals = [monom[k] for k in self.dual_slots]
            if any(duals):
                factors.append(f"ey[{','.join(str(c) for c in duals)}]")
        t = monom[self.t_slot]
        if t:
            if t == 2:
                factors.append("q")
            elif t % 2 == 0:
                factors.append(f"q^{{{t // 2}}}")
            else:
                factors.append(f"q^{{{t}/2}}")
        if self.y_slot is not None and monom[self.y_slot]:
            e = monom[self.y_slot]
            factors.append("y" if e == 1 else f"y^{{{e}}}")
        return factors

    def parse(self, text: str) -> "RatFunc":
        """
        Interpreta a forma textual canônica (ou qualquer texto na mesma gramática).

        Raises:
            ParseError: Se o texto não seguir a gramática
        """
        cleaned = text.strip()
        match = re.fullmatch(r"\((.*)\)/\((.*)\)", cleaned)
        if match and _balanced(match.group(1)) and _balanced(match.group(2)):
            return self._parse_sum(match.group(1), text) / self._parse_sum(match.group(2), text)
        return self._parse_sum(cleaned, text)

    def _parse_sum(self, body: str, original: str) -> "RatFunc":
        terms: Dict[Exponents, Fraction] = {}
        for sign, term in _split_terms(body, original):
            monom, coeff = self._parse_term(term, original)
            terms[monom] = terms.get(monom, Fraction(0)) + sign * coeff
        return self.from_terms(terms)

    def _parse_term(self, term: str, original: str) -> Tuple[Exponents, Fraction]:
        key = [0] * self.ngens
        coeff = Fraction(1)
        for factor in _split_top_level(term, "*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            char_match = re.fullmatch(r"(e|ey)\[(-?\d+(?:,-?\d+)*)\]", factor)
            if char_match and self.kind != RingKind.COHOMOLOGY:
                values = [int(v) for v in char_match.group(2).split(",")]
                slots = self.char_slots if char_match.group(1) == "e" else self.dual_slots
                if len(values) != self.rank or not slots:
                    raise ParseError(original, "elemento do anel")
                for slot, value in zip(slots, values):
                    key[slot] += value
                continue
            power_match = re.fullmatch(r"(q|y|h|a\d+)(?:\^\{?(-?\d+)(?:/(2))?\}?)?", factor)
            if not power_match:
                raise ParseError(original, "elemento do anel")
            name, exp_text, half = power_match.groups()
            exp = int(exp_text) if exp_text is not None else 1
            if name == "q":
                if self.t_slot is None:
                    raise ParseError(original, "elemento do anel")
                key[self.t_slot] += exp if half else 2 * exp
            elif half:
                raise ParseError(original, "elemento do anel")
            elif name.startswith("a"):
                index = int(name[1:]) - 1
                if self.kind != RingKind.COHOMOLOGY or not 0 <= index < self.rank:
                    raise ParseError(original, "elemento do anel")
                key[index] += exp
            else:
                slot = self.y_slot if name == "y" else self.h_slot
                if slot is None:
                    raise ParseError(original, "elemento do anel")
                key[slot] += exp
        return tuple(key), coeff

    # ------------------------------------------------------------------
    # Utilidades
    # ------------------------------------------------------------------
    def random_laurent(self, rng: random.Random, terms: int = 3, spread: int = 1) -> "RatFunc":
        """Polinômio de Laurent pseudoaleatório (caracteres e q^{1/2}) para testes de relações."""
        out: Dict[Exponents, Fraction] = {}
        for _ in range(terms):
            key = [0] * self.ngens
            for slot in self.char_slots:
                key[slot] = rng.randint(-spread, spread)
            if self.t_slot is not None:
                key[self.t_slot] = rng.randint(-spread, spread)
            if self.h_slot is not None:
                key = [max(0, e) for e in key]
                key[self.h_slot] = rng.randint(0, spread)
            out[tuple(key)] = Fraction(rng.randint(-3, 3) or 1)
        return self.from_terms(out)


def _balanced(text: str) -> bool:
    depth = 0
    for ch in text:
        depth += ch in "([{"
        depth -= ch in ")]}"
        if depth < 0:
            return False
    return depth == 0


def _split_top_level(text: str, separator: str) -> List[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == separator and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def _split_terms(body: str, original: str) -> Iterable[Tuple[int, str]]:
    text = body.replace(" ", "")
    if not text:
        raise ParseError(original, "elemento do anel")
    terms, depth, current, sign = [], 0, [], 1
    for index, ch in enumerate(text):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch in "+-" and depth == 0:
            if current:
                terms.append((sign, "".join(current)))
                current = []
            elif index > 0 and ch == "+":
                raise ParseError(original, "elemento do anel")
            sign = -1 if ch == "-" else 1
            continue
        current.append(ch)
    if not current:
        raise ParseError(original, "elemento do anel")
    terms.append((sign, "".join(current)))
    return terms


class RatFunc:
    """
    Elemento do corpo de frações de um CharacterRing.

    a/b = c/d sse ad = cb, independente do representante guardado.
    """

    __slots__ = ("ring", "frac")

    def __init__(self, ring: CharacterRing, frac):
        self.ring = ring
        self.frac = frac

    def _coerce(self, other) -> Optional["RatFunc"]:
        if isinstance(other, RatFunc):
            if other.ring.names != self.ring.names:
                raise ValidationError("Elementos de anéis diferentes", field="ring")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.ring, self.frac + other.frac)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.ring, self.frac - other.frac)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.ring, other.frac - self.frac)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.ring, self.frac * other.frac)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("Divisão por zero em RatFunc")
        return RatFunc(self.ring, self.frac / other.frac)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return RatFunc(self.ring, -self.frac)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.ring.one / (self ** (-exponent))
        return RatFunc(self.ring, self.frac ** exponent)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.frac.numer * other.frac.denom == other.frac.numer * self.frac.denom

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.frac.numer

    def is_polynomial(self) -> bool:
        """
        Polinômio de Laurent (K-teoria) ou polinômio genuíno (cohomologia).

        O denominador reduzido é único a menos de escalar, logo o teste
        não depende do representante.
        """
        denom = self.frac.denom
        if len(denom) != 1:
            return False
        if self.ring.kind == RingKind.COHOMOLOGY:
            return not any(next(iter(denom.keys())))
        return True

    def to_laurent(self) -> "LaurentPoly":
        return LaurentPoly.from_ratfunc(self)

    def weyl_act(self, w: WeylElt) -> "RatFunc":
        return self.ring.weyl_act(w, self)

    def bar(self) -> "RatFunc":
        return self.ring.bar(self)

    def __str__(self) -> str:
        return self.ring.serialize(self)

    def __repr__(self) -> str:
        return f"RatFunc({self})"


@dataclass(frozen=True)
class LaurentPoly:
    """
    Polinômio de Laurent: mapa finito expoente → coeficiente racional, sem zeros guardados.
    """

    terms: Tuple[Tuple[Exponents, Fraction], ...]
    ring: CharacterRing = field(compare=False, repr=False)

    @classmethod
    def from_ratfunc(cls, f: RatFunc) -> "LaurentPoly":
        """
        Raises:
            ValidationError: Se f não for polinômio de Laurent
        """
        if not f.is_polynomial():
            raise ValidationError(f"{f} não é um polinômio de Laurent", field="f")
        numer, _ = f.ring.canonical_parts(f)
        return cls(tuple(sorted((m, c) for m, c in numer.items() if c)), f.ring)

    def to_ratfunc(self) -> RatFunc:
        return self.ring.from_terms(dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def character_exponents(self) -> List[Tuple[int, ...]]:
        """Projeção dos expoentes na parte de caracteres (x); q, y e ħ são descartados."""
        slots = self.ring.char_slots
        return sorted({tuple(m[k] for k in slots) for m, _ in self.terms})

    def coefficient(self, exponents: Exponents) -> Fraction:
        return dict(self.terms).get(tuple(exponents), Fraction(0))

    def __str__(self) -> str:
        return str(self.to_ratfunc())
