"""
Restricción de vectores a subgrupos mediante palabras y búsqueda de
extensiones de acciones.

Una acción (G, θ) se extiende si existe un vector ambiente θ' de un grupo
G' ⊃ G, con signatura ambiente de la misma dimensión de Teichmüller, cuya
restricción por la receta correspondiente es topológicamente equivalente a
θ. Las inclusiones que bajan la dimensión no son extensiones: indican que la
superficie aislada del ambiente está en la clausura del estrato.
"""
import logging
from functools import lru_cache

from sympy import primefactors

from apps.default.exceptions import InvalidInputError, UnsupportedError
from apps.groups.managers.group_builder import build_group
from apps.groups.utils.isomorphism import automorphisms, find_isomorphism
from apps.groups.utils.recognition import least_primitive_fourth_root
from apps.groups.utils.structure import evaluate_word, subgroup_generated, subgroup_group
from apps.signatures.utils.riemann_hurwitz import area
from apps.vectors.models import Extension, ExtensionStep, GeneratingVector, RestrictionRecipe
from apps.vectors.utils.enumeration import enumerate_vectors
from apps.vectors.utils.partition import vector_orbits

logger = logging.getLogger(__name__)


def _am(q):
    return [('AM(q)', f"AM:q={q}")]


def _quadratic(q):
    rho = least_primitive_fourth_root(q)
    return [('C_q |x4 C_4', f"CqC4:q={q},rho={rho}")] if rho else []


RECIPES = (
    RestrictionRecipe(
        'klein_in_am', '(0;2,2q,2q)', '(0;2,4,2q)',
        ('z2^-2', 'z3^-1', 'z2^-1*z3^-1*z2'), _am, label='X8',
    ),
    RestrictionRecipe(
        'dicyclic_in_am', '(0;4,4,q)', '(0;2,4,2q)',
        ('z2', 'z3*z2*z3^-1', 'z3^2'), _am, label='X8',
    ),
    RestrictionRecipe(
        'cyclic_in_klein', '(0;q,2q,2q)', '(0;2,2q,2q)',
        ('y3^2', 'y1*y2*y1', 'y2'), lambda q: [('C_q x C_2^2', f"C{q}xC2xC2")], variables='y',
    ),
    RestrictionRecipe(
        'dihedral_in_dihedral', '(0;2,2,q,q)', '(0;2,2,2,q)',
        ('y1*y2*y1', 'y2', 'y2*y1*y4*y1*y2', 'y4'), lambda q: [('D_2q', f"D{2 * q}")], variables='y',
    ),
    RestrictionRecipe(
        'cyclic_in_dihedral', '(0;2,2,q,q)', '(0;2,2,2,q)',
        ('y1', 'y2*y1*y2', 'y4', 'y1*y2*y4*y2*y1'), lambda q: [('D_2q', f"D{2 * q}")], variables='y',
    ),
    RestrictionRecipe(
        'dihedral_in_quadratic', '(0;2,2,q,q)', '(0;4,4,q)',
        ('y1*y2^2*y1^-1', 'y1^2', 'y1^-1*y3*y1', 'y3'), _quadratic, variables='y', label='X4',
    ),
    RestrictionRecipe(
        'klein_four_in_am', '(0;2,2,2,q)', '(0;2,4,2q)',
        ('z1', 'z2*z1*z2^-1', 'z2^2', 'z3^2'), _am, label='X8',
    ),
    RestrictionRecipe(
        'cyclic_in_a4', '(0;3,q,3q)', '(0;2,3,3q)',
        ('z2', 'z3^3', 'z3^-3*z2^-1'), lambda q: [('C_q x A_4', f"C{q}xA4")],
    ),
)

RECIPES_BY_NAME = {r.name: r for r in RECIPES}


def recipe(name):
    try:
        return RECIPES_BY_NAME[name]
    except KeyError:
        raise InvalidInputError(f"Receta desconocida: {name!r}")


def restrict_images(ambient_vector, rcp):
    """Evalúa las palabras de la receta sobre las imágenes del vector ambiente."""
    group = ambient_vector.group
    bindings = rcp.bindings(ambient_vector.images)
    return tuple(evaluate_word(group, w, bindings) for w in rcp.words)


def _sub_periods_for(ambient_vector, rcp):
    for q in primefactors(ambient_vector.group.order):
        if q >= 5 and rcp.ambient_signature(q).periods == tuple(ambient_vector.periods):
            return rcp.sub_signature(q).periods
    raise InvalidInputError(
        f"La receta {rcp.name} no se aplica a un vector con periodos {ambient_vector.periods}"
    )


def restrict_with_embedding(ambient_vector, rcp):
    """
    Como ``restrict_ske``, junto con la inclusión en el grupo ambiente:
    índice del subgrupo -> índice en el ambiente.
    """
    periods = _sub_periods_for(ambient_vector, rcp)
    images = restrict_images(ambient_vector, rcp)
    group = ambient_vector.group
    if tuple(group.orders[g] for g in images) != periods:
        raise InvalidInputError(f"La receta {rcp.name} no produce los periodos {periods}")
    elements = subgroup_generated(group, images)
    names = [(f"h{i + 1}", g) for i, g in enumerate(images)]
    sub, embedding = subgroup_group(group, elements, names, tag=f"{rcp.name}({group.spec_tag})")
    position = {g: i for i, g in enumerate(embedding)}
    vector = GeneratingVector(sub, periods, tuple(position[g] for g in images))
    return vector, embedding


def restrict_ske(ambient_vector, rcp):
    """
    El vector de la subsignatura, sobre el subgrupo generado por las
    palabras (como grupo propio).
    """
    return restrict_with_embedding(ambient_vector, rcp)[0]


def _aut_representatives(group, sigma):
    """Un vector por órbita de Aut(G) (sin trenzas)."""
    images = [omega.image for omega in automorphisms(group)]
    seen = set()
    for v in enumerate_vectors(group, sigma):
        if v.images in seen:
            continue
        for image in images:
            seen.add(tuple(image[g] for g in v.images))
        yield v


@lru_cache(maxsize=None)
def restriction_map(rcp, q, ambient_spec, sub_group, sub_sigma):
    """
    Órbitas de (sub_group, sub_sigma) alcanzadas al restringir vectores del
    grupo ambiente: diccionario id de órbita -> vector ambiente testigo.
    """
    ambient = build_group(ambient_spec)
    ambient_sigma = rcp.ambient_signature(q)
    partition = vector_orbits(sub_group, sub_sigma)
    reached = {}
    for w in _aut_representatives(ambient, ambient_sigma):
        images = restrict_images(w, rcp)
        if tuple(ambient.orders[g] for g in images) != sub_sigma.periods:
            continue
        elements = subgroup_generated(ambient, images)
        if len(elements) != sub_group.order:
            continue
        h_group, embedding = subgroup_group(ambient, elements)
        phi = find_isomorphism(h_group, sub_group)
        if phi is None:
            continue
        position = {g: i for i, g in enumerate(embedding)}
        oid = partition.orbit_of(phi(position[g]) for g in images)
        if oid is not None and oid not in reached:
            reached[oid] = w
    logger.debug("%s con q=%d: %d órbitas alcanzadas desde %s", rcp.name, q, len(reached), ambient_spec)
    return reached


def _matching(v):
    """Pares (receta, q) cuya subsignatura es la de ``v``."""
    sigma = v.signature
    for q in primefactors(v.group.order):
        if q < 5:
            continue
        for rcp in RECIPES:
            sub = rcp.sub_signature(q)
            if sub != sigma:
                continue
            index = area(sub) / area(rcp.ambient_signature(q))
            yield rcp, q, index


def is_supported(sigma, group_order):
    for q in primefactors(group_order):
        if q < 5:
            continue
        for rcp in RECIPES:
            if sigma in (rcp.sub_signature(q), rcp.ambient_signature(q)):
                return True
    return False


def _steps(v, same_dimension):
    partition = vector_orbits(v.group, v.signature)
    oid = partition.orbit_of(v.images)
    steps = []
    for rcp, q, index in _matching(v):
        if rcp.same_dimension(q) != same_dimension:
            continue
        for name, spec in rcp.ambient_specs(q):
            ambient = build_group(spec)
            if ambient.order != index * v.group.order:
                continue
            try:
                reached = restriction_map(rcp, q, spec, v.group, v.signature)
            except UnsupportedError as exc:
                logger.warning("Se omite %s con ambiente %s: %s", rcp.name, spec, exc)
                continue
            if oid in reached:
                witness = reached[oid]
                steps.append(ExtensionStep(rcp.name, name, witness.signature, witness, rcp.label))
    return steps


def _longest_chain(v):
    best = ()
    for step in _steps(v, same_dimension=True):
        chain = (step,) + _longest_chain(step.ambient_vector)
        if len(chain) > len(best):
            best = chain
    return best


def extendability(v):
    """
    Cadena maximal de extensiones de la acción de ``v`` (la última es el
    grupo de automorfismos genérico del estrato), o None si no se extiende.
    """
    if not is_supported(v.signature, v.group.order):
        raise UnsupportedError(f"La signatura {v.signature} no está en la tabla de inclusiones")
    chain = _longest_chain(v)
    return Extension(chain) if chain else None


def specializations(v):
    """Superficies aisladas de mayor simetría en la clausura del estrato de ``v``."""
    if not is_supported(v.signature, v.group.order):
        raise UnsupportedError(f"La signatura {v.signature} no está en la tabla de inclusiones")
    return tuple(_steps(v, same_dimension=False))
