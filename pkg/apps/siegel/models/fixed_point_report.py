from dataclasses import dataclass, field


@dataclass(frozen=True, eq=False)
class FixedPointReport:
    """
    Resultado del Newton multiarranque para R·Z = Z con R en ``generators``.

    ``locus_dimension`` es el defecto de rango del jacobiano en la solución;
    si es positivo, ``tangent_basis`` contiene matrices simétricas que generan
    el espacio tangente del lugar fijo.
    """
    generators: tuple
    solution: object
    residuals: tuple
    locus_dimension: int
    tangent_basis: tuple = ()
    starts: int = 0
    converged_starts: int = 0
    seed: int = 0
    convention: str = 'right'
    relations: dict = field(default_factory=dict)

    @property
    def g(self):
        return self.solution.g

    @property
    def max_residual(self):
        return max(self.residuals, default=0.0)

    @property
    def k(self):
        """Parámetro k = Z_33, es decir ``Z[2, 2]``, cuando g >= 3."""
        return self.solution.entry(2, 2) if self.g >= 3 else None

    @property
    def is_isolated(self):
        return self.locus_dimension == 0
