"""
Agrupación de los irreducibles complejos en representaciones racionales.
"""
from math import gcd

from apps.characters.managers.character_table import char_table
from apps.characters.models import RationalIrrep

# Índice de Schur 1 en todas las familias soportadas (productos semidirectos
# A ⋊ K con A y K abelianos). Es una convención: en C_q ⋊ C_4 con acción de
# orden 2 (dicíclico) los irreducibles fieles de grado 2 son cuaterniónicos y su
# índice real es 2. Las dimensiones que se publican usan s = 1.
SCHUR_INDEX = 1


def galois_orbit(chi):
    """Conjugados de Galois distintos de ``chi``, en orden de k creciente."""
    n = chi.conductor
    seen, orbit = set(), []
    for k in range(1, max(n, 2)):
        if gcd(k, n) != 1:
            continue
        conjugate = chi if k == 1 else chi.galois(k)
        key = conjugate.key()
        if key not in seen:
            seen.add(key)
            orbit.append(conjugate)
    return orbit


def character_field_degree(chi):
    """[Q(χ) : Q], el número de conjugados de Galois distintos."""
    return len(galois_orbit(chi))


def rational_irreps(group):
    """Partición de ``char_table(group)`` en órbitas de Galois."""
    table = char_table(group)
    index = {chi.key(): i for i, chi in enumerate(table)}
    assigned = [False] * len(table)
    result = []
    for i, chi in enumerate(table):
        if assigned[i]:
            continue
        members = sorted({index[c.key()] for c in galois_orbit(chi)})
        for j in members:
            assigned[j] = True
        constituents = tuple(table[j] for j in members)
        result.append(RationalIrrep(constituents, len(members), SCHUR_INDEX, chi.degree))
    return result
