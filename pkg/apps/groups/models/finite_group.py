"""
Grupos finitos pequeños representados por su tabla de multiplicación.

Los elementos son los índices 0..order-1. Los grupos construidos como
producto semidirecto A ⋊ K (A abeliano) guardan además su ``SplitStructure``,
que usa el módulo de caracteres para aplicar el método de Wigner-Mackey.
"""
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm, prod
from typing import Optional


@dataclass(frozen=True, eq=False)
class SplitStructure:
    """
    Descripción de G = A ⋊ K con A = ⊕ Z_{n_i}.

    El elemento (a, k) tiene índice ``k * |A| + radix(a)`` donde ``radix`` es
    la codificación de base mixta little-endian sobre ``moduli``. ``action[k]``
    es la matriz entera (por filas) con la que k actúa sobre las coordenadas
    de A.
    """
    moduli: tuple
    complement: Optional['FiniteGroup']
    action: tuple

    @property
    def a_order(self):
        return prod(self.moduli)

    @property
    def k_order(self):
        return 1 if self.complement is None else self.complement.order

    def encode(self, coords):
        index, base = 0, 1
        for c, n in zip(coords, self.moduli):
            index += (c % n) * base
            base *= n
        return index

    def decode(self, a_index):
        coords = []
        for n in self.moduli:
            coords.append(a_index % n)
            a_index //= n
        return tuple(coords)

    def split_element(self, g):
        """Índice -> (coordenadas en A, índice en K)."""
        k, a = divmod(g, self.a_order)
        return self.decode(a), k

    def apply(self, k, coords):
        matrix = self.action[k]
        return tuple(
            sum(m * c for m, c in zip(row, coords)) % n
            for row, n in zip(matrix, self.moduli)
        )


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: tuple
    generators: tuple
    spec_tag: str
    identity: int = 0
    split: Optional[SplitStructure] = field(default=None, repr=False)

    def mul(self, a, b):
        return self.table[a][b]

    def product(self, elements):
        result = self.identity
        for g in elements:
            result = self.table[result][g]
        return result

    def power(self, g, n):
        if n < 0:
            g, n = self.inverses[g], -n
        result = self.identity
        for _ in range(n % self.orders[g]):
            result = self.table[result][g]
        return result

    def conjugate(self, g, h):
        """h g h^{-1}."""
        return self.table[self.table[h][g]][self.inverses[h]]

    @cached_property
    def inverses(self):
        inv = [0] * self.order
        for g, row in enumerate(self.table):
            inv[g] = row.index(self.identity)
        return tuple(inv)

    @cached_property
    def orders(self):
        result = []
        for g in range(self.order):
            n, x = 1, g
            while x != self.identity:
                x = self.table[x][g]
                n += 1
            result.append(n)
        return tuple(result)

    @cached_property
    def exponent(self):
        return lcm(*self.orders)

    @cached_property
    def is_abelian(self):
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order) for b in range(a + 1, self.order)
        )

    @property
    def generator_names(self):
        return tuple(name for name, _ in self.generators)

    @property
    def generator_elements(self):
        return tuple(g for _, g in self.generators)

    def named(self):
        return dict(self.generators)

    def __repr__(self):
        return f"FiniteGroup({self.spec_tag}, order={self.order})"


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    image: tuple

    def __call__(self, g):
        return self.image[g]

    @property
    def is_bijective(self):
        return self.source.order == self.target.order and len(set(self.image)) == self.source.order

    def compose(self, other):
        """self ∘ other."""
        return GroupHom(other.source, self.target, tuple(self.image[other.image[g]] for g in range(other.source.order)))
