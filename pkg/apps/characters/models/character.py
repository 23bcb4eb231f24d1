from dataclasses import dataclass
from math import lcm

from apps.cyclotomic.models import CycNum
from apps.default.exceptions import InvalidInputError


@dataclass(frozen=True, eq=False)
class Character:
    """
    Función de clase con valores en Q(ζ_n), guardada por elemento del grupo.
    Los irreducibles de ``char_table`` llevan etiqueta; las sumas (como el
    carácter analítico) pueden no llevarla.
    """
    group: object
    values: tuple
    label: str = ''

    def __call__(self, g):
        return self.values[g]

    @property
    def degree(self):
        value = self.values[self.group.identity].rational_part()
        if value is None or value.denominator != 1:
            raise InvalidInputError(f"El carácter {self.label!r} no tiene grado entero")
        return int(value)

    @property
    def conductor(self):
        return lcm(*(v.conductor for v in self.values))

    def _check_group(self, other):
        if other.group is not self.group:
            raise InvalidInputError("Los caracteres son de grupos distintos")

    def __add__(self, other):
        self._check_group(other)
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def scaled(self, factor):
        return Character(self.group, tuple(v * factor for v in self.values), self.label)

    def conj(self):
        return Character(self.group, tuple(v.conj() for v in self.values), f"conj({self.label})")

    def galois(self, k):
        n = self.conductor
        return Character(self.group, tuple(v.lift(n).galois(k) for v in self.values))

    def key(self):
        """Clave exacta de los valores, todos llevados al conductor común."""
        n = self.conductor
        return tuple(v.lift(n).key() for v in self.values)

    @classmethod
    def zero(cls, group, n=1):
        return cls(group, tuple(CycNum.rational(n, 0) for _ in range(group.order)))

    def __repr__(self):
        return f"Character({self.label or '?'}, {self.group.spec_tag})"


@dataclass(frozen=True)
class RationalIrrep:
    """
    Órbita de Galois de irreducibles complejos: la representación racional
    irreducible W con m = grado del cuerpo de caracteres, s = índice de Schur
    y d = grado común de sus constituyentes.
    """
    constituents: tuple
    m: int
    schur: int
    d: int

    @property
    def n(self):
        return self.d // self.schur

    @property
    def character(self):
        return self.constituents[0]

    @property
    def is_trivial(self):
        chi = self.character
        return self.d == 1 and all(v == 1 for v in chi.values)

    @property
    def label(self):
        first = self.character.label
        return first if self.m == 1 else f"Gal[{first}]x{self.m}"
