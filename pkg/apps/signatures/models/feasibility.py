from dataclasses import dataclass, field


@dataclass(frozen=True)
class GroupScreen:
    """Un grupo de orden λq examinado y las signaturas que superan el filtro aritmético."""
    name: str
    group: object = field(repr=False, compare=False)
    signatures: tuple = ()


@dataclass(frozen=True)
class FeasiblePair:
    name: str
    group: object = field(repr=False, compare=False)
    signature: object = None


@dataclass(frozen=True)
class FeasibilityReport:
    q: int
    verdicts: dict = field(default_factory=dict)
    examined: dict = field(default_factory=dict)

    @property
    def genus(self):
        return self.q - 1

    @property
    def realizable_lambdas(self):
        return tuple(lam for lam, pairs in sorted(self.verdicts.items()) if pairs)

    def pairs(self, lam):
        return self.verdicts.get(lam, ())

    def signatures(self, lam):
        return sorted({pair.signature for pair in self.pairs(lam)})
