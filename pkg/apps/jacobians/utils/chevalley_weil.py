"""
Representación analítica por la fórmula de Chevalley-Weil.

Para un irreducible no trivial ρ de grado d y un vector (θ(x_1), ..., θ(x_s))
con periodos k_l,

    μ_ρ = -d + Σ_l Σ_{j=1}^{k_l} N_{l,j} (1 - j/k_l),

donde N_{l,j} es el número de autovalores de ρ(θ(x_l)) iguales a ω_{k_l}^j.
Los N_{l,j} se recuperan de los valores del carácter en ⟨θ(x_l)⟩ por la
transformada de Fourier discreta inversa, de forma exacta.
"""
import logging
from fractions import Fraction

from apps.characters.managers.character_table import char_table
from apps.characters.models import Character
from apps.cyclotomic.models import CycNum
from apps.default.exceptions import CrossCheckError, UnsupportedError
from apps.jacobians.models import AnalyticDecomposition
from apps.signatures.utils.riemann_hurwitz import rh_genus

logger = logging.getLogger(__name__)


def _is_trivial(chi):
    return chi.degree == 1 and all(v == 1 for v in chi.values)


def eigenvalue_counts(chi, g):
    """N_j = #{autovalores de ρ(g) iguales a ω_k^j}, j = 0..k-1, con k = ord(g)."""
    group = chi.group
    k = group.orders[g]
    powers = [group.identity]
    for _ in range(k - 1):
        powers.append(group.mul(powers[-1], g))
    counts = []
    for j in range(k):
        total = sum((chi(h) * CycNum.zeta(k, -j * t) for t, h in enumerate(powers)), start=0)
        value = total.rational_part()
        if value is None or (value / k).denominator != 1 or value < 0:
            raise CrossCheckError(f"Conteo de autovalores no entero para {chi.label} en {g}")
        counts.append(int(value / k))
    return counts


def multiplicity(chi, vector):
    """μ_ρ para un irreducible no trivial."""
    mu = Fraction(-chi.degree)
    for g, k in zip(vector.images, vector.periods):
        counts = eigenvalue_counts(chi, g)
        # el autovalor 1 (j = 0 ≡ k) tiene peso 0
        mu += sum(Fraction(counts[j]) * (1 - Fraction(j, k)) for j in range(1, k))
    if mu.denominator != 1 or mu < 0:
        raise CrossCheckError(f"μ({chi.label}) = {mu} no es un entero no negativo")
    return int(mu)


def chevalley_weil(vector):
    """Descomposición de ρ_a en irreducibles complejos."""
    if vector.signature.gamma != 0:
        raise UnsupportedError("Sólo se admiten vectores con γ = 0")
    group = vector.group
    genus = rh_genus(group.order, vector.signature)
    if genus.denominator != 1 or genus < 2:
        raise CrossCheckError(f"Género {genus} no válido para {group.spec_tag} {vector.signature}")
    genus = int(genus)
    table = char_table(group)
    multiplicities = []
    character = Character.zero(group)
    for chi in table:
        mu = 0 if _is_trivial(chi) else multiplicity(chi, vector)
        multiplicities.append((chi.label, mu))
        if mu:
            character = character + chi.scaled(mu)
    total = sum(mu * chi.degree for (_, mu), chi in zip(multiplicities, table))
    if total != genus:
        raise CrossCheckError(f"Σ μ·d = {total} distinto del género {genus}")
    logger.info("%s %s: ρ_a con soporte %s", group.spec_tag, vector.signature,
                [label for label, mu in multiplicities if mu])
    return AnalyticDecomposition(vector, tuple(multiplicities), Character(group, character.values, 'rho_a'), genus)
