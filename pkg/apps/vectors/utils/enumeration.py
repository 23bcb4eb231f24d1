"""
Vectores generadores de signaturas de género orbital 0: validación,
enumeración exhaustiva y búsqueda del primer ejemplo.
"""
import logging

from apps.default.exceptions import InvalidInputError, UnsupportedError
from apps.default.utils.config import get_setting
from apps.groups.utils.structure import (
    check_order_limit,
    conjugacy_classes,
    evaluate_word,
    generates,
)
from apps.signatures.models import Signature
from apps.vectors.models import GeneratingVector

logger = logging.getLogger(__name__)


def _periods(sigma):
    if isinstance(sigma, Signature):
        if sigma.gamma != 0:
            raise UnsupportedError(f"Sólo se admiten signaturas con γ = 0, se recibió {sigma}")
        return sigma.periods
    return tuple(sigma)


def _check_length(periods):
    limit = get_setting('GROUP_LIMITS', 'MAX_VECTOR_LENGTH', 6)
    if len(periods) > limit:
        raise UnsupportedError(f"Signatura con {len(periods)} periodos > {limit}")


def is_valid_vector(group, sigma, images):
    """
    Comprueba los órdenes exactos, la relación larga x_1···x_s = 1 y que las
    imágenes generen el grupo. ``sigma`` es una ``Signature`` o la tupla de
    periodos en el orden de ``images``.
    """
    periods = _periods(sigma)
    images = tuple(images)
    if len(images) != len(periods):
        return False
    if any(not 0 <= g < group.order for g in images):
        return False
    if any(group.orders[g] != k for g, k in zip(images, periods)):
        return False
    if group.product(images) != group.identity:
        return False
    return generates(group, images)


def make_vector(group, sigma, images):
    """Construye el vector o lanza ``InvalidInputError`` si no es válido."""
    periods = _periods(sigma)
    if not is_valid_vector(group, periods, images):
        raise InvalidInputError(
            f"{tuple(images)} no es un vector generador de {group.spec_tag} con periodos {periods}"
        )
    return GeneratingVector(group, tuple(periods), tuple(images))


def vector_from_words(group, sigma, words):
    """Vector a partir de palabras en los generadores con nombre del grupo."""
    return make_vector(group, sigma, [evaluate_word(group, w) for w in words])


def _elements_by_order(group):
    by_order = {}
    for g, k in enumerate(group.orders):
        by_order.setdefault(k, []).append(g)
    return by_order


def _search(group, periods, first_only, first_choices=None):
    check_order_limit(group)
    _check_length(periods)
    by_order = _elements_by_order(group)
    if len(periods) < 2 or any(k not in by_order for k in periods):
        return []
    table, inverses, orders = group.table, group.inverses, group.orders
    last = periods[-1]
    pools = [by_order[k] for k in periods[:-1]]
    if first_choices is not None:
        pools[0] = [g for g in pools[0] if g in first_choices]
    found = []
    chosen = []

    def backtrack(i, partial):
        if i == len(pools):
            closing = inverses[partial]
            if orders[closing] == last and generates(group, chosen + [closing]):
                found.append(tuple(chosen) + (closing,))
                return first_only
            return False
        row = table[partial]
        for g in pools[i]:
            chosen.append(g)
            stop = backtrack(i + 1, row[g])
            chosen.pop()
            if stop:
                return True
        return False

    backtrack(0, group.identity)
    return found


def enumerate_vectors(group, sigma):
    """Todos los vectores válidos, en orden lexicográfico de imágenes."""
    periods = _periods(sigma)
    images = _search(group, periods, first_only=False)
    logger.debug("%s %s: %d vectores", group.spec_tag, periods, len(images))
    return [GeneratingVector(group, tuple(periods), v) for v in images]


def find_vector(group, sigma):
    """
    Primer vector válido o None. La primera imagen se restringe a
    representantes de clases de conjugación, lo que no pierde generalidad.
    """
    periods = _periods(sigma)
    reps = {c[0] for c in conjugacy_classes(group)}
    images = _search(group, periods, first_only=True, first_choices=reps)
    return GeneratingVector(group, tuple(periods), images[0]) if images else None
