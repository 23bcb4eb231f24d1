"""
Informe de órbitas de equivalencia topológica de una acción.
"""
import logging

from apps.default.exceptions import InvalidInputError
from apps.groups.managers.group_builder import build_group
from apps.signatures.models import Signature
from apps.vectors.models import GeneratingVector, Orbit, OrbitReport
from apps.vectors.utils.partition import normalizer_classes, vector_orbits
from apps.vectors.utils.restriction import extendability, is_supported, specializations

logger = logging.getLogger(__name__)


def orbits(group, sigma, extensions=True):
    """
    Particiona los vectores de (group, sigma) en órbitas de Aut(G) × trenzas.

    Con ``extensions`` cada órbita lleva su cadena de extensiones y sus
    especializaciones, si la signatura está en la tabla de inclusiones.
    """
    partition = vector_orbits(group, sigma)
    with_table = extensions and is_supported(sigma, group.order)
    result = []
    for rep, size in zip(partition.representatives, partition.sizes):
        v = GeneratingVector(group, partition.periods, rep)
        if with_table:
            result.append(Orbit(v, size, extendability(v), specializations(v)))
        else:
            result.append(Orbit(v, size))
    classes, merged = normalizer_classes(group, sigma)
    report = OrbitReport(group, sigma, tuple(result), partition.total, classes, merged)
    logger.info(
        "%s %s: %d órbitas, %d extensibles, %d clases de isomorfía",
        group.spec_tag, sigma, report.orbit_count, report.extendable_count, classes,
    )
    return report


def cyclic_quadrilateral_classes(q):
    """
    Clases de acciones de C_q con signatura (0;q,q,q,q), como exponentes
    (1, a, b, c) de t = x normalizados para empezar por t.
    """
    if q < 3:
        raise InvalidInputError(f"q debe ser al menos 3, se recibió {q}")
    group = build_group(f"C{q}")
    partition = vector_orbits(group, Signature(0, (q, q, q, q)))
    # en C_q el índice de t^a es a
    return partition.representatives
