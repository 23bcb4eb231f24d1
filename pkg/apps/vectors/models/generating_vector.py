from dataclasses import dataclass

from apps.signatures.models import Signature


@dataclass(frozen=True)
class GeneratingVector:
    """
    Epimorfismo con núcleo de superficie θ: Δ -> G para una signatura de
    género orbital 0, guardado como las imágenes (θ(x_1), ..., θ(x_s)).

    ``periods`` sigue el orden de ``images``; tras un movimiento de trenza
    puede no estar ordenado. ``signature`` es siempre la forma ordenada.
    """
    group: object
    periods: tuple
    images: tuple

    @property
    def signature(self):
        return Signature(0, self.periods)

    @property
    def is_sorted(self):
        return list(self.periods) == sorted(self.periods)

    @property
    def length(self):
        return len(self.images)

    def product(self):
        return self.group.product(self.images)

    def as_dict(self):
        return {
            'group': self.group.spec_tag,
            'sigma': self.signature.text,
            'periods': list(self.periods),
            'images': list(self.images),
        }

    def __repr__(self):
        return f"GeneratingVector({self.group.spec_tag}, {self.periods}, {self.images})"
