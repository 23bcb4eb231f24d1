"""
Operaciones exactas sobre funciones de clase: producto interno, cuadrados
simétrico y alternado, y dimensiones de subespacios fijos.
"""
import logging
from fractions import Fraction

from apps.characters.models import Character
from apps.default.exceptions import CrossCheckError, InvalidInputError

logger = logging.getLogger(__name__)


def _rational(value, what):
    result = value.rational_part()
    if result is None:
        raise CrossCheckError(f"{what} no es racional: {value.render()}")
    return result


def _elements(chi, subgroup):
    return range(chi.group.order) if subgroup is None else sorted(subgroup)


def inner_product(chi1, chi2, subgroup=None):
    """(1/|H|) Σ_{h∈H} χ1(h)·conj(χ2(h)), con H = G por defecto."""
    if chi1.group is not chi2.group:
        raise InvalidInputError("Producto interno de caracteres de grupos distintos")
    elements = _elements(chi1, subgroup)
    total = sum((chi1(h) * chi2(h).conj() for h in elements), start=0)
    return _rational(total, "El producto interno") / len(elements)


def sym_square_char(chi):
    """h -> ½[χ(h)² + χ(h²)]."""
    g = chi.group
    half = Fraction(1, 2)
    return Character(g, tuple((chi(h) * chi(h) + chi(g.mul(h, h))) * half for h in range(g.order)),
                     f"Sym2({chi.label})")


def antisym_square_char(chi):
    """h -> ½[χ(h)² - χ(h²)]."""
    g = chi.group
    half = Fraction(1, 2)
    return Character(g, tuple((chi(h) * chi(h) - chi(g.mul(h, h))) * half for h in range(g.order)),
                     f"Alt2({chi.label})")


def sym_sum(chi, subgroup=None):
    """Σ_{h∈H} χ^sym(h), exacto."""
    sym = sym_square_char(chi)
    total = sum((sym(h) for h in _elements(chi, subgroup)), start=0)
    return _rational(total, "La suma del cuadrado simétrico")


def sym_sum_paths(chi, subgroup=None):
    """
    Σ_{h∈H} χ^sym(h) calculada directamente y por la identidad

        ½[Σ_{h∈H} (χ + χ̄)^sym(h) - |H|·⟨χ|χ⟩_H].

    Devuelve ambos valores; lanza ``CrossCheckError`` si difieren.
    """
    direct = sym_sum(chi, subgroup)
    size = len(_elements(chi, subgroup))
    via_conjugate = (sym_sum(chi + chi.conj(), subgroup) - size * inner_product(chi, chi, subgroup)) / 2
    if direct != via_conjugate:
        raise CrossCheckError(
            f"Suma simétrica de {chi.label or 'χ'}: {direct} directa frente a {via_conjugate} por conjugados"
        )
    return direct, via_conjugate


def sym_sum_identity(chi, subgroup=None):
    return sym_sum_paths(chi, subgroup)[0]


def fixed_dim(chi, subgroup):
    """dim V^H = (1/|H|) Σ_{h∈H} χ(h); debe ser entero no negativo."""
    elements = sorted(subgroup)
    if not elements:
        raise InvalidInputError("Subgrupo vacío")
    total = sum((chi(h) for h in elements), start=0)
    value = _rational(total, "La suma de valores") / len(elements)
    if value.denominator != 1 or value < 0:
        raise CrossCheckError(f"dim V^H = {value} no es un entero no negativo: ¿H no es un subgrupo?")
    return int(value)
