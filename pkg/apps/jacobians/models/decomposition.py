from dataclasses import dataclass


@dataclass(frozen=True)
class AnalyticDecomposition:
    """
    Representación analítica ρ_a de la acción dada por ``vector``:
    multiplicidades μ_ρ por etiqueta de irreducible y su carácter.
    """
    vector: object
    multiplicities: tuple
    character: object
    genus: int

    def mu(self, label):
        return dict(self.multiplicities).get(label, 0)

    @property
    def support(self):
        return tuple(label for label, mu in self.multiplicities if mu)


@dataclass(frozen=True)
class IsogenyFactor:
    """Factor B_l^{n_l} de JS asociado a la representación racional W_l."""
    irrep: str
    n: int
    dim_b: int
    m: int
    d: int
    schur: int = 1
    character: object = None

    @property
    def zero(self):
        return self.dim_b == 0

    @property
    def dim_a(self):
        return self.n * self.dim_b


@dataclass(frozen=True)
class IsogenyDecomposition:
    vector: object
    factors: tuple
    genus: int

    @property
    def nonzero(self):
        return tuple(f for f in self.factors if not f.zero)

    def describe(self):
        parts = [f"B[{f.irrep}]^{f.n}" for f in self.nonzero]
        dims = ', '.join(f"dim B[{f.irrep}] = {f.dim_b}" for f in self.nonzero)
        return f"JS ~ {' x '.join(parts) or '0'}; {dims}"


@dataclass(frozen=True)
class NsReport:
    """
    Dimensión N del lugar de variedades abelianas principalmente polarizadas
    fijadas por la imagen simpléctica del grupo (o del subgrupo ``subgroup_order``).
    """
    vector: object
    n: int
    sym_sum_direct: object
    sym_sum_conjugate_path: object
    minus_one_in_group: bool
    subgroup_order: int
