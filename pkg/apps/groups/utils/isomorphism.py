"""
Homomorfismos, automorfismos e isomorfismos por búsqueda exhaustiva sobre
las imágenes de un conjunto generador.
"""
import logging
from functools import lru_cache

from apps.default.exceptions import InvalidInputError
from apps.groups.models import GroupHom
from apps.groups.utils.structure import (
    check_order_limit,
    class_histogram,
    class_sizes,
    minimal_generators,
    order_histogram,
)

logger = logging.getLogger(__name__)


def extend_to_hom(source, target, gens, images):
    """
    Extiende gens -> images a un homomorfismo recorriendo el grafo de Cayley.

    Devuelve la tupla de imágenes por elemento, o None si la asignación no
    respeta alguna relación (o ``gens`` no genera ``source``).
    """
    image = [None] * source.order
    image[source.identity] = target.identity
    frontier = [source.identity]
    while frontier:
        nxt = []
        for g in frontier:
            hg = image[g]
            row, trow = source.table[g], target.table[hg]
            for s, t in zip(gens, images):
                gs = row[s]
                value = trow[t]
                if image[gs] is None:
                    image[gs] = value
                    nxt.append(gs)
                elif image[gs] != value:
                    return None
        frontier = nxt
    if any(x is None for x in image):
        return None
    return tuple(image)


def _search(source, target, first_only=False):
    gens = minimal_generators(source)
    s_sizes, t_sizes = class_sizes(source), class_sizes(target)
    candidates = []
    for g in gens:
        options = [
            h for h in range(target.order)
            if target.orders[h] == source.orders[g]
            and t_sizes[h] == s_sizes[g]
        ]
        candidates.append(options)
    results = []
    chosen = []

    def backtrack(i):
        if i == len(gens):
            image = extend_to_hom(source, target, gens, chosen)
            if image is not None and len(set(image)) == target.order:
                results.append(image)
                return first_only
            return False
        for h in candidates[i]:
            ok = True
            for j in range(i):
                # órdenes de productos y cocientes entre imágenes
                if target.orders[target.table[chosen[j]][h]] != source.orders[source.table[gens[j]][gens[i]]]:
                    ok = False
                    break
                if target.orders[target.table[target.inverses[chosen[j]]][h]] != \
                        source.orders[source.table[source.inverses[gens[j]]][gens[i]]]:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(h)
            stop = backtrack(i + 1)
            chosen.pop()
            if stop:
                return True
        return False

    backtrack(0)
    return results


def automorphisms(group):
    """Todos los automorfismos de ``group``, ordenados por su tupla de imágenes."""
    check_order_limit(group)
    return _automorphisms(group)


@lru_cache(maxsize=None)
def _automorphisms(group):
    images = sorted(set(_search(group, group)))
    logger.debug("|Aut(%s)| = %d", group.spec_tag, len(images))
    return tuple(GroupHom(group, group, image) for image in images)


@lru_cache(maxsize=None)
def automorphism_generators(group):
    """Subconjunto voraz de ``automorphisms(group)`` que genera Aut(G)."""
    autos = automorphisms(group)
    identity = tuple(range(group.order))
    reached = {identity}
    gens = []
    for omega in autos:
        if omega.image in reached:
            continue
        gens.append(omega)
        frontier = list(reached)
        while frontier:
            nxt = []
            for image in frontier:
                for w in gens:
                    composed = tuple(w.image[x] for x in image)
                    if composed not in reached:
                        reached.add(composed)
                        nxt.append(composed)
            frontier = nxt
        if len(reached) == len(autos):
            break
    return tuple(gens)


def find_isomorphism(source, target):
    """Un isomorfismo source -> target, o None."""
    if source.order != target.order:
        return None
    check_order_limit(source)
    if order_histogram(source) != order_histogram(target):
        return None
    if class_histogram(source) != class_histogram(target):
        return None
    found = _search(source, target, first_only=True)
    return GroupHom(source, target, found[0]) if found else None


def are_isomorphic(source, target):
    return find_isomorphism(source, target) is not None


def hom_from_images(source, target, images):
    """Homomorfismo determinado por las imágenes de los generadores con nombre."""
    image = extend_to_hom(source, target, source.generator_elements, list(images))
    if image is None:
        raise InvalidInputError("Las imágenes dadas no definen un homomorfismo")
    return GroupHom(source, target, image)
