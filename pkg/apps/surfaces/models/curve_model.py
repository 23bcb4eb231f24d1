from dataclasses import dataclass


@dataclass(frozen=True)
class CurveModel:
    """
    Modelo algebraico plano de una superficie o familia. ``parameters`` son
    pares (símbolo, dominio) de los parámetros que quedan libres.
    """
    tag: str
    q: int
    equation: str
    automorphisms: tuple
    group: str
    parameters: tuple = ()
    rho: int = None

    @property
    def genus(self):
        return self.q - 1

    @property
    def is_family(self):
        return any(name == 't' for name, _ in self.parameters)
