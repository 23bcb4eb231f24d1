"""
Servicios compartidos por los comandos y la API: resolver la acción pedida
(un vector concreto o un representante por órbita) y calcular sus informes.
"""
import logging

from apps.default.exceptions import InvalidInputError
from apps.groups.managers.group_builder import build_group
from apps.groups.utils.structure import evaluate_word, subgroup_generated
from apps.jacobians.utils.chevalley_weil import chevalley_weil
from apps.jacobians.utils.decomposition import group_algebra_decomposition, quotient_decomposition
from apps.jacobians.utils.moduli import moduli_fixed_dim
from apps.signatures.models import Signature
from apps.vectors.models import GeneratingVector
from apps.vectors.utils.enumeration import make_vector, vector_from_words
from apps.vectors.utils.partition import vector_orbits

logger = logging.getLogger(__name__)


def single_group(text):
    group = build_group(text)
    if isinstance(group, tuple):
        raise InvalidInputError(f"{text!r} describe {len(group)} grupos; indique uno solo")
    return group


def resolve_vectors(group_text, sigma_text, images=None, words=None, all_orbits=False):
    """Lista de vectores a estudiar, en orden determinista."""
    group = single_group(group_text)
    sigma = Signature.parse(sigma_text)
    given = [images is not None, words is not None, bool(all_orbits)]
    if sum(given) != 1:
        raise InvalidInputError("Indique exactamente uno de: imágenes, palabras o todas las órbitas")
    if images is not None:
        return [make_vector(group, sigma, tuple(images))]
    if words is not None:
        return [vector_from_words(group, sigma, list(words))]
    partition = vector_orbits(group, sigma)
    logger.info("%s %s: %d órbitas", group.spec_tag, sigma, len(partition.representatives))
    return [GeneratingVector(group, partition.periods, rep) for rep in partition.representatives]


def parse_subgroup(group, words):
    """Subgrupo generado por las palabras dadas, o None si no hay palabras."""
    if not words:
        return None
    return subgroup_generated(group, [evaluate_word(group, w) for w in words])


def decomposition_reports(vectors, subgroup_words=None):
    """Tripletas (ρ_a, descomposición, cociente o None) por vector."""
    results = []
    for v in vectors:
        decomposition = group_algebra_decomposition(v)
        subgroup = parse_subgroup(v.group, subgroup_words)
        quotient = quotient_decomposition(decomposition, subgroup) if subgroup is not None else None
        results.append((chevalley_weil(v), decomposition, quotient))
    return results


def ns_reports(vectors):
    return [moduli_fixed_dim(v) for v in vectors]
