"""
Descriptores de grupos y su forma de texto canónica.

Gramática aceptada (los factores de un producto directo se separan con ``x``)::

    C10 | C:10 | 10          grupo cíclico
    D7  | D:7                grupo diédrico de orden 14
    CqC4:q=13,rho=5          C_q ⋊ C_4 con BAB^{-1} = A^rho
    AM:q=5                   grupo de Accola-Maclachlan de orden 8q
    all:lambda=4,q=7         todos los grupos de orden λq
    A4 | Q8                  complementos no cíclicos
"""
import re
from dataclasses import dataclass

from apps.default.exceptions import InvalidInputError

_CYCLIC_RE = re.compile(r'^(?:C:?)?(\d+)$')
_DIHEDRAL_RE = re.compile(r'^D:?(\d+)$')
_PARAMS_RE = re.compile(r'^(\w+):(.*)$')


class GroupSpec:
    """Base común; cada variante sabe escribirse en forma canónica."""

    @property
    def text(self):
        raise NotImplementedError

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    n: int

    @property
    def text(self):
        return f"C{self.n}"


@dataclass(frozen=True)
class Dihedral(GroupSpec):
    n: int

    @property
    def text(self):
        return f"D{self.n}"


@dataclass(frozen=True)
class DirectProduct(GroupSpec):
    factors: tuple

    @property
    def text(self):
        return 'x'.join(f.text for f in self.factors)


@dataclass(frozen=True)
class SemidirectCqC4(GroupSpec):
    q: int
    rho: int

    @property
    def text(self):
        return f"CqC4:q={self.q},rho={self.rho}"


@dataclass(frozen=True)
class AccolaMaclachlanGroup(GroupSpec):
    q: int

    @property
    def text(self):
        return f"AM:q={self.q}"


@dataclass(frozen=True)
class AllOfOrderLambdaQ(GroupSpec):
    lam: int
    q: int

    @property
    def text(self):
        return f"all:lambda={self.lam},q={self.q}"


@dataclass(frozen=True)
class Alternating4(GroupSpec):

    @property
    def text(self):
        return "A4"


@dataclass(frozen=True)
class Quaternion8(GroupSpec):

    @property
    def text(self):
        return "Q8"


def _int_param(params, key, text):
    try:
        return int(params[key])
    except (KeyError, ValueError):
        raise InvalidInputError(f"Falta el parámetro entero '{key}' en {text!r}")


def _parse_params(body, text):
    params = {}
    for item in body.split(','):
        key, sep, value = item.partition('=')
        if not sep:
            raise InvalidInputError(f"Parámetro mal formado {item!r} en {text!r}")
        params[key.strip()] = value.strip()
    return params


def _parse_factor(token, text):
    if token == 'A4':
        return Alternating4()
    if token == 'Q8':
        return Quaternion8()
    match = _CYCLIC_RE.match(token)
    if match:
        return Cyclic(int(match.group(1)))
    match = _DIHEDRAL_RE.match(token)
    if match:
        return Dihedral(int(match.group(1)))
    match = _PARAMS_RE.match(token)
    if match:
        kind, params = match.group(1), _parse_params(match.group(2), text)
        if kind == 'CqC4':
            return SemidirectCqC4(_int_param(params, 'q', text), _int_param(params, 'rho', text))
        if kind == 'AM':
            return AccolaMaclachlanGroup(_int_param(params, 'q', text))
        if kind == 'all':
            return AllOfOrderLambdaQ(_int_param(params, 'lambda', text), _int_param(params, 'q', text))
    raise InvalidInputError(f"Descriptor de grupo desconocido: {text!r}")


def parse_group_spec(text):
    """Texto -> GroupSpec."""
    if isinstance(text, GroupSpec):
        return text
    cleaned = (text or '').replace(' ', '')
    if not cleaned:
        raise InvalidInputError("Descriptor de grupo vacío")
    factors = [_parse_factor(token, text) for token in cleaned.split('x')]
    if len(factors) == 1:
        return factors[0]
    if any(isinstance(f, AllOfOrderLambdaQ) for f in factors):
        raise InvalidInputError("'all:' no puede aparecer dentro de un producto directo")
    return DirectProduct(tuple(factors))
