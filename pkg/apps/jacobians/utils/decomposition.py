"""
Descomposición isógena de JS por el álgebra de grupo y de las jacobianas de
los cocientes S/H.
"""
import logging
from fractions import Fraction

from apps.characters.utils.class_functions import fixed_dim
from apps.characters.utils.rational import rational_irreps
from apps.default.exceptions import CrossCheckError, UnsupportedError
from apps.groups.utils.structure import subgroup_generated
from apps.jacobians.models import IsogenyDecomposition, IsogenyFactor
from apps.jacobians.utils.chevalley_weil import chevalley_weil

logger = logging.getLogger(__name__)


def _dim_b(irrep, vector):
    """m[d(γ - 1) + ½ Σ_j (d - d^{⟨θ(x_j)⟩})]."""
    chi = irrep.character
    d = irrep.d
    fixed = [fixed_dim(chi, subgroup_generated(vector.group, [g])) for g in vector.images]
    value = irrep.m * (d * (vector.signature.gamma - 1) + Fraction(sum(d - f for f in fixed), 2))
    if value.denominator != 1 or value < 0:
        raise CrossCheckError(f"dim B[{irrep.label}] = {value} no es un entero no negativo")
    return int(value)


def group_algebra_decomposition(vector):
    """
    JS ~ Π B_l^{n_l}. Los factores de dimensión 0 se conservan marcados como
    nulos. Se contrasta dim A_l = n_l·dim B_l con la parte isotípica de ρ_a.
    """
    if vector.signature.gamma != 0:
        raise UnsupportedError("Sólo se admiten vectores con γ = 0")
    analytic = chevalley_weil(vector)
    factors = []
    for irrep in rational_irreps(vector.group):
        dim_b = vector.signature.gamma if irrep.is_trivial else _dim_b(irrep, vector)
        factor = IsogenyFactor(irrep.label, irrep.n, dim_b, irrep.m, irrep.d, irrep.schur, irrep.character)
        isotypic = sum(analytic.mu(chi.label) * chi.degree for chi in irrep.constituents)
        if factor.dim_a != isotypic:
            raise CrossCheckError(
                f"{irrep.label}: n·dim B = {factor.dim_a} frente a {isotypic} por Chevalley-Weil"
            )
        factors.append(factor)
    total = sum(f.dim_a for f in factors)
    if total != analytic.genus:
        raise CrossCheckError(f"Σ n·dim B = {total} distinto del género {analytic.genus}")
    decomposition = IsogenyDecomposition(vector, tuple(factors), analytic.genus)
    logger.info("%s: %s", vector.group.spec_tag, decomposition.describe())
    return decomposition


def quotient_decomposition(decomposition, subgroup):
    """Pares (factor, n_l^H) con n_l^H = d_l^H / s_l: J(S/H) ~ Π B_l^{n_l^H}."""
    result = []
    for factor in decomposition.factors:
        fixed = fixed_dim(factor.character, subgroup)
        if fixed % factor.schur:
            raise CrossCheckError(f"n^H de {factor.irrep} no es entero")
        result.append((factor, fixed // factor.schur))
    return result
