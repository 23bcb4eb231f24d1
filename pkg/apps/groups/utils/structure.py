"""
Consultas estructurales sobre un ``FiniteGroup``: órdenes, subgrupos,
clases de conjugación, palabras en los generadores.
"""
import re
from collections import Counter
from functools import lru_cache

from apps.default.exceptions import InvalidInputError, UnsupportedError
from apps.default.utils.config import get_setting
from apps.groups.models import FiniteGroup

_TOKEN_RE = re.compile(r'\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(-?\d+)|(\^)|(\*)|(\()|(\)))')


def check_order_limit(group):
    limit = get_setting('GROUP_LIMITS', 'MAX_ORDER', 200)
    if group.order > limit:
        raise UnsupportedError(f"El grupo {group.spec_tag} tiene orden {group.order} > {limit}")


def element_order(group, g):
    return group.orders[g]


def subgroup_generated(group, gens):
    """Cierre de ``gens`` bajo la multiplicación."""
    elements = {group.identity}
    frontier = [group.identity]
    gens = tuple(set(gens))
    while frontier:
        nxt = []
        for x in frontier:
            row = group.table[x]
            for s in gens:
                y = row[s]
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elements)


def generates(group, gens):
    return len(subgroup_generated(group, gens)) == group.order


@lru_cache(maxsize=None)
def conjugacy_classes(group):
    """Clases de conjugación ordenadas por su menor índice."""
    seen = [False] * group.order
    classes = []
    for g in range(group.order):
        if seen[g]:
            continue
        cls = sorted({group.conjugate(g, h) for h in range(group.order)})
        for x in cls:
            seen[x] = True
        classes.append(tuple(cls))
    return tuple(classes)


@lru_cache(maxsize=None)
def class_index(group):
    """Elemento -> índice de su clase de conjugación."""
    index = [0] * group.order
    for i, cls in enumerate(conjugacy_classes(group)):
        for g in cls:
            index[g] = i
    return tuple(index)


def class_sizes(group):
    sizes = [0] * group.order
    for cls in conjugacy_classes(group):
        for g in cls:
            sizes[g] = len(cls)
    return tuple(sizes)


def order_histogram(group):
    return tuple(sorted(Counter(group.orders).items()))


def class_histogram(group):
    return tuple(sorted(Counter((group.orders[c[0]], len(c)) for c in conjugacy_classes(group)).items()))


@lru_cache(maxsize=None)
def minimal_generators(group):
    """
    Conjunto generador voraz: recorre los elementos de mayor a menor orden y
    añade los que no están en el subgrupo generado hasta el momento.
    """
    candidates = sorted(range(group.order), key=lambda g: (-group.orders[g], g))
    gens = []
    current = frozenset({group.identity})
    for g in candidates:
        if len(current) == group.order:
            break
        if g not in current:
            gens.append(g)
            current = subgroup_generated(group, gens)
    return tuple(gens)


def subgroup_group(group, elements, generators=(), tag=None):
    """
    El subgrupo ``elements`` como ``FiniteGroup`` independiente.

    Los elementos se renumeran en orden creciente de índice, de modo que la
    identidad sigue siendo 0. ``generators`` son pares (nombre, índice en G).
    Devuelve el grupo y la lista índice-nuevo -> índice-en-G.
    """
    ordered = sorted(elements)
    position = {g: i for i, g in enumerate(ordered)}
    try:
        table = tuple(tuple(position[group.table[a][b]] for b in ordered) for a in ordered)
    except KeyError:
        raise InvalidInputError("El conjunto dado no es cerrado bajo la multiplicación")
    gens = tuple((name, position[g]) for name, g in generators)
    sub = FiniteGroup(
        order=len(ordered),
        table=table,
        generators=gens,
        spec_tag=tag or f"sub({group.spec_tag})",
        identity=position[group.identity],
    )
    return sub, tuple(ordered)


# Palabras

def _tokenize(word):
    tokens, pos = [], 0
    word = word.strip()
    while pos < len(word):
        match = _TOKEN_RE.match(word, pos)
        if not match or match.end() == pos:
            raise InvalidInputError(f"Carácter inesperado en la palabra {word!r} (posición {pos})")
        name, number, caret, star, lpar, rpar = match.groups()
        if name is not None:
            tokens.append(('name', name))
        elif number is not None:
            tokens.append(('int', int(number)))
        elif caret:
            tokens.append(('^', None))
        elif star:
            tokens.append(('*', None))
        elif lpar:
            tokens.append(('(', None))
        else:
            tokens.append((')', None))
        pos = match.end()
    return tokens


class _WordParser:

    def __init__(self, group, word, bindings):
        self.group = group
        self.word = word
        self.bindings = bindings
        self.tokens = _tokenize(word)
        self.pos = 0

    def fail(self, message):
        raise InvalidInputError(f"{message} en la palabra {self.word!r}")

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind):
        if self.peek() != kind:
            self.fail(f"Se esperaba '{kind}'")
        value = self.tokens[self.pos][1]
        self.pos += 1
        return value

    def parse(self):
        value = self.expr()
        if self.pos != len(self.tokens):
            self.fail("Sobran símbolos")
        return value

    def expr(self):
        value = self.term()
        while self.peek() == '*':
            self.take('*')
            value = self.group.mul(value, self.term())
        return value

    def term(self):
        value = self.atom()
        if self.peek() == '^':
            self.take('^')
            value = self.group.power(value, self.take('int'))
        return value

    def atom(self):
        kind = self.peek()
        if kind == '(':
            self.take('(')
            value = self.expr()
            self.take(')')
            return value
        if kind == 'int':
            if self.take('int') != 1:
                self.fail("Sólo el entero 1 denota la identidad")
            return self.group.identity
        if kind == 'name':
            name = self.take('name')
            if name == 'e':
                return self.group.identity
            if name not in self.bindings:
                self.fail(f"Generador desconocido '{name}'")
            return self.bindings[name]
        self.fail("Palabra incompleta")


def evaluate_word(group, word, bindings=None):
    """
    Evalúa una palabra como ``x^-1*z*(x*y)^2`` en ``group``.

    ``bindings`` asocia nombres a elementos; por defecto se usan los
    generadores con nombre del grupo. ``1`` y ``e`` denotan la identidad.
    """
    return _WordParser(group, word, group.named() if bindings is None else bindings).parse()
