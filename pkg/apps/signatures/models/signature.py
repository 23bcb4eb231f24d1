import re
from dataclasses import dataclass

from apps.default.exceptions import InvalidInputError

_TEXT_RE = re.compile(r'^\((\d+);([\d,\s]*)\)$')


@dataclass(frozen=True, order=True)
class Signature:
    """
    Signatura (γ; k_1, ..., k_s) de un grupo fuchsiano. Los periodos se
    guardan ordenados de menor a mayor.
    """
    gamma: int
    periods: tuple = ()

    def __post_init__(self):
        if self.gamma < 0:
            raise InvalidInputError(f"Género orbital negativo: {self.gamma}")
        periods = tuple(sorted(int(k) for k in self.periods))
        if any(k < 2 for k in periods):
            raise InvalidInputError(f"Los periodos deben ser >= 2: {periods}")
        object.__setattr__(self, 'periods', periods)

    @classmethod
    def parse(cls, text):
        match = _TEXT_RE.match((text or '').replace(' ', ''))
        if not match:
            raise InvalidInputError(f"Signatura mal formada: {text!r}, se espera '(g;k1,k2,...)'")
        body = match.group(2)
        periods = tuple(int(k) for k in body.split(',') if k) if body else ()
        return cls(int(match.group(1)), periods)

    @property
    def length(self):
        return len(self.periods)

    @property
    def text(self):
        return f"({self.gamma};{','.join(str(k) for k in self.periods)})"

    def __str__(self):
        return self.text
