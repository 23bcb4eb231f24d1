"""
Fórmula de Riemann-Hurwitz y búsqueda de signaturas admisibles.
"""
import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from math import lcm

from apps.default.exceptions import InvalidInputError
from apps.signatures.models import Signature

logger = logging.getLogger(__name__)


def area(sigma):
    """2γ - 2 + Σ(1 - 1/k_i)."""
    return 2 * sigma.gamma - 2 + sum(1 - Fraction(1, k) for k in sigma.periods)


def rh_genus(group_order, sigma):
    """
    Género g con 2g - 2 = |G|·(2γ - 2 + Σ(1 - 1/k_i)), como racional exacto.

    No se exige que el resultado sea entero ni mayor que 1.
    """
    if group_order < 1:
        raise InvalidInputError(f"Orden de grupo inválido: {group_order}")
    return 1 + Fraction(group_order) * area(sigma) / 2


def teich_dim(sigma):
    """Dimensión 3γ - 3 + s del espacio de Teichmüller de la signatura."""
    if area(sigma) <= 0:
        raise InvalidInputError(f"La signatura {sigma} no es hiperbólica")
    return 3 * sigma.gamma - 3 + sigma.length


def abelian_screen(periods, gamma, exponent):
    """
    Condiciones necesarias para un grupo abeliano: cada periodo divide el mcm
    de los demás y, si γ = 0, el mcm de todos es el exponente del grupo.
    """
    if not periods:
        return gamma > 0
    total = lcm(*periods)
    for i in range(len(periods)):
        others = periods[:i] + periods[i + 1:]
        if not others or lcm(*others) != total:
            return False
    return gamma > 0 or total == exponent


def admissible_signatures(group, genus):
    """
    Signaturas con periodos en los órdenes de elementos de ``group`` y cuyo
    género de Riemann-Hurwitz es exactamente ``genus``.

    Cotas: γ <= (g-1)/|G| + 1 y s <= 2(2(g-1)/|G| - 2γ + 2), ambas
    consecuencia de que cada término 1 - 1/k_i vale al menos 1/2.
    """
    if genus < 2:
        raise InvalidInputError(f"El género debe ser >= 2, se recibió {genus}")
    n = group.order
    orders = sorted({k for k in group.orders if k > 1})
    reduced = Fraction(genus - 1, n)
    max_gamma = int(reduced + 1)
    found = set()
    for gamma in range(max_gamma + 1):
        max_s = int(2 * (2 * reduced - 2 * gamma + 2))
        for s in range(max_s + 1):
            for periods in combinations_with_replacement(orders, s):
                sigma = Signature(gamma, periods)
                if rh_genus(n, sigma) != genus:
                    continue
                if group.is_abelian and not abelian_screen(periods, gamma, group.exponent):
                    continue
                found.add(sigma)
    result = sorted(found)
    logger.debug("%s, g=%d: %d signaturas admisibles", group.spec_tag, genus, len(result))
    return result
