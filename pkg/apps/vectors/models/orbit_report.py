from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class ExtensionStep:
    """Un eslabón de una cadena de extensiones: grupo y vector ambiente."""
    recipe: str
    ambient_name: str
    ambient_signature: object
    ambient_vector: object
    label: Optional[str] = None

    def describe(self):
        return f"{self.ambient_name} {self.ambient_signature.text}"


@dataclass(frozen=True)
class Extension:
    steps: tuple

    @property
    def target(self):
        return self.steps[-1]

    def describe(self):
        return ' -> '.join(step.describe() for step in self.steps)


@dataclass(frozen=True)
class Orbit:
    representative: object
    size: int
    extension: Optional[Extension] = None
    specializations: tuple = ()

    @property
    def extendable(self):
        return self.extension is not None


@dataclass(frozen=True)
class OrbitReport:
    group: object
    signature: object
    orbits: tuple
    total: int
    iso_class_count: int
    merged: tuple = field(default=())

    @property
    def orbit_count(self):
        return len(self.orbits)

    @property
    def extendable_count(self):
        return sum(1 for o in self.orbits if o.extendable)

    @property
    def non_extendable(self):
        return tuple(o for o in self.orbits if not o.extendable)
