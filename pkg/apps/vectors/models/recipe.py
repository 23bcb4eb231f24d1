import re
from dataclasses import dataclass
from typing import Callable, Optional

from apps.signatures.models import Signature
from apps.signatures.utils.riemann_hurwitz import teich_dim

_TERM_RE = re.compile(r'^(\d*)(q?)$')


def expand_shape(shape, q):
    """'(0;2,2q,2q)' con q=5 -> Signature (0;2,10,10)."""
    gamma, body = shape.strip('()').split(';')
    periods = []
    for term in body.split(','):
        coef, has_q = _TERM_RE.match(term).groups()
        value = int(coef) if coef else 1
        periods.append(value * q if has_q else value)
    return Signature(int(gamma), tuple(periods))


@dataclass(frozen=True)
class RestrictionRecipe:
    """
    Inclusión de signaturas sub ⊂ ambient junto con las palabras (en los
    generadores canónicos z1, z2, ... del ambiente) que dan los generadores
    canónicos del subgrupo.
    """
    name: str
    sub_shape: str
    ambient_shape: str
    words: tuple
    ambient_specs: Callable
    variables: str = 'z'
    label: Optional[str] = None

    def sub_signature(self, q):
        return expand_shape(self.sub_shape, q)

    def ambient_signature(self, q):
        return expand_shape(self.ambient_shape, q)

    def bindings(self, images):
        return {f"{self.variables}{i + 1}": g for i, g in enumerate(images)}

    def same_dimension(self, q):
        return teich_dim(self.sub_signature(q)) == teich_dim(self.ambient_signature(q))
