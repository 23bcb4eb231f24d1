"""
Partición de los vectores generadores en órbitas de Aut(G) × trenzas.

Los nodos del recorrido son tuplas de imágenes en cualquier orden de
periodos; el tamaño de una órbita cuenta sólo los vectores con los periodos
en el orden de la signatura, y su representante es el menor de ellos.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

from apps.groups.utils.isomorphism import automorphism_generators
from apps.groups.utils.structure import evaluate_word
from apps.vectors.utils.enumeration import enumerate_vectors

logger = logging.getLogger(__name__)

# Identificación por el normalizador del grupo triangular (índice 2):
# palabras en los generadores canónicos y1, y2, y3.
NORMALIZER_WORDS = {
    'quadratic': ('y2', 'y3*y1*y3^-1', 'y3'),     # (0;4,4,q)
    'cyclic': ('y2^-1*y3^-1', 'y3', 'y2'),        # (0;q,2q,2q)
}


@dataclass(frozen=True)
class VectorPartition:
    periods: tuple
    representatives: tuple
    sizes: tuple
    index: dict

    @property
    def total(self):
        return sum(self.sizes)

    def orbit_of(self, images):
        return self.index.get(tuple(images))


def _braid_images(group, images, i):
    table, inverses = group.table, group.inverses
    a, b = images[i], images[i + 1]
    return images[:i] + (b, table[table[inverses[b]][a]][b]) + images[i + 2:]


@lru_cache(maxsize=None)
def vector_orbits(group, sigma):
    periods = sigma.periods
    autos = [omega.image for omega in automorphism_generators(group)]
    orders = group.orders
    index = {}
    reps, sizes = [], []
    for v in enumerate_vectors(group, sigma):
        if v.images in index:
            continue
        oid = len(reps)
        index[v.images] = oid
        frontier = [v.images]
        best, size = v.images, 0
        while frontier:
            nxt = []
            for node in frontier:
                if tuple(orders[g] for g in node) == periods:
                    size += 1
                    if node < best:
                        best = node
                neighbours = [_braid_images(group, node, i) for i in range(len(node) - 1)]
                neighbours += [tuple(image[g] for g in node) for image in autos]
                for other in neighbours:
                    if other not in index:
                        index[other] = oid
                        nxt.append(other)
            frontier = nxt
        reps.append(best)
        sizes.append(size)
    logger.debug("%s %s: %d órbitas, %d vectores", group.spec_tag, sigma, len(reps), sum(sizes))
    return VectorPartition(periods, tuple(reps), tuple(sizes), index)


def normalizer_kind(sigma):
    """Tipo de identificación por normalizador que admite la signatura, o None."""
    k = sigma.periods
    if sigma.gamma != 0 or len(k) != 3:
        return None
    if k[0] == k[1] == 4 and k[2] > 4 and k[2] % 2:
        return 'quadratic'
    if k[1] == k[2] == 2 * k[0] and k[0] % 2:
        return 'cyclic'
    return None


def normalizer_classes(group, sigma):
    """
    Une las órbitas relacionadas por la identificación del normalizador.

    Devuelve (número de clases, pares de órbitas unidas). Si la signatura no
    admite identificación las clases coinciden con las órbitas.
    """
    partition = vector_orbits(group, sigma)
    count = len(partition.representatives)
    kind = normalizer_kind(sigma)
    if kind is None:
        return count, ()
    parent = list(range(count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged = []
    for oid, rep in enumerate(partition.representatives):
        bindings = {f"y{i + 1}": g for i, g in enumerate(rep)}
        image = tuple(evaluate_word(group, w, bindings) for w in NORMALIZER_WORDS[kind])
        other = partition.orbit_of(image)
        if other is None:
            continue
        a, b = find(oid), find(other)
        if a != b:
            parent[max(a, b)] = min(a, b)
            merged.append((min(oid, other), max(oid, other)))
    classes = len({find(x) for x in range(count)})
    return classes, tuple(merged)
