"""
Acción de Sp(2g, Z) sobre el semiespacio de Siegel,

    R·Z = (A + ZC)⁻¹(B + ZD),

con los bloques de R tomados por filas. Con esta fórmula
[I Z]·R = (A + ZC)[I R·Z], de modo que R·Z = Z equivale a que el espacio de
filas de [I Z] sea invariante por R.
"""
import logging

import numpy as np
import scipy.linalg as LA

from apps.default.exceptions import ConvergenceError, InvalidInputError
from apps.siegel.models import SiegelPoint, SymplecticMatrix, standard_form

logger = logging.getLogger(__name__)

# por encima de este número de condición A + ZC se trata como singular
MAX_CONDITION = 1e12


def is_symplectic(entries):
    """RᵀJR = J con aritmética entera exacta."""
    array = np.array(entries, dtype=np.int64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise InvalidInputError(f"Se espera una matriz cuadrada, se recibió forma {array.shape}")
    if array.shape[0] % 2:
        raise InvalidInputError(f"Dimensión impar: {array.shape[0]}")
    j = standard_form(array.shape[0] // 2)
    return bool(np.array_equal(array.T @ j @ array, j))


def act(r, z):
    if not isinstance(z, SiegelPoint):
        z = SiegelPoint(z)
    if r.g != z.g:
        raise InvalidInputError(f"Géneros distintos: R actúa en g={r.g}, Z tiene g={z.g}")
    a, b, c, d = (block.astype(np.complex128) for block in r.blocks)
    m = z.matrix
    lhs = a + m @ c
    condition = np.linalg.cond(lhs)
    if not np.isfinite(condition) or condition > MAX_CONDITION:
        logger.warning("A + ZC casi singular (cond = %.2e) para %s", condition, r.name or 'R')
        raise ConvergenceError(f"A + ZC es casi singular (cond = {condition:.2e})")
    return SiegelPoint(LA.solve(lhs, b + m @ d))


def probe_action_convention(r1, r2, z, tol=1e-10):
    """
    'right' si act(R1R2, Z) = act(R2, act(R1, Z)), 'left' si coincide con
    act(R1, act(R2, Z)), 'none' en otro caso.
    """
    product = act(r1 @ r2, z)
    if product.distance(act(r2, act(r1, z))) < tol:
        return 'right'
    if product.distance(act(r1, act(r2, z))) < tol:
        return 'left'
    return 'none'


def translation(symmetric):
    """[[I, S], [0, I]] para S simétrica entera."""
    s = np.array(symmetric, dtype=np.int64)
    g = s.shape[0]
    identity = np.eye(g, dtype=np.int64)
    return SymplecticMatrix.from_array(np.block([[identity, s], [np.zeros_like(s), identity]]), 'T')


def as_symplectic(entries, name=''):
    if isinstance(entries, SymplecticMatrix):
        return entries
    return SymplecticMatrix(tuple(tuple(row) for row in entries), name)
