"""
Transformaciones de trenza Φ_i y acción de Aut(G) sobre vectores generadores.
"""
from apps.default.exceptions import InvalidInputError
from apps.vectors.models import GeneratingVector


def _check_index(v, i):
    if not 1 <= i < v.length:
        raise InvalidInputError(f"Índice de trenza {i} fuera de rango 1..{v.length - 1}")


def braid_move(v, i):
    """Φ_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1} (índices desde 1)."""
    _check_index(v, i)
    g = v.group
    images, periods = list(v.images), list(v.periods)
    a, b = images[i - 1], images[i]
    images[i - 1] = b
    images[i] = g.mul(g.mul(g.inverses[b], a), b)
    periods[i - 1], periods[i] = periods[i], periods[i - 1]
    return GeneratingVector(g, tuple(periods), tuple(images))


def braid_inverse(v, i):
    """Φ_i^{-1}: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i."""
    _check_index(v, i)
    g = v.group
    images, periods = list(v.images), list(v.periods)
    a, b = images[i - 1], images[i]
    images[i - 1] = g.mul(g.mul(a, b), g.inverses[a])
    images[i] = a
    periods[i - 1], periods[i] = periods[i], periods[i - 1]
    return GeneratingVector(g, tuple(periods), tuple(images))


def aut_apply(omega, v):
    """ω ∘ θ, componente a componente."""
    if omega.source is not v.group or omega.target is not v.group:
        raise InvalidInputError("El automorfismo no actúa sobre el grupo del vector")
    if not omega.is_bijective:
        raise InvalidInputError("El homomorfismo no es biyectivo")
    return GeneratingVector(v.group, v.periods, tuple(omega(g) for g in v.images))
