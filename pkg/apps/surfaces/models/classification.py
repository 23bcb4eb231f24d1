from dataclasses import dataclass, field


@dataclass(frozen=True)
class PairSummary:
    """Un par (grupo, signatura) realizable y su informe de órbitas."""
    lam: int
    name: str
    report: object = field(repr=False)
    stratum: str = None


@dataclass(frozen=True)
class ClassificationReport:
    """
    Clasificación de las superficies de género q - 1 con más de q
    automorfismos: los λ realizables, las órbitas de cada par y el número de
    estratos por familia.
    """
    q: int
    feasibility: object = field(repr=False)
    pairs: tuple = ()
    strata: dict = field(default_factory=dict)

    @property
    def genus(self):
        return self.q - 1

    @property
    def realizable_lambdas(self):
        return self.feasibility.realizable_lambdas
