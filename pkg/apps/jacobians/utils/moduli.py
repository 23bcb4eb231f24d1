"""
Dimensión N del lugar de Siegel fijado por la acción, N = ⟨χ_ρa^sym | 1⟩.
"""
import logging

from apps.characters.utils.class_functions import sym_sum_paths
from apps.default.exceptions import CrossCheckError, InvalidInputError
from apps.groups.utils.structure import subgroup_generated
from apps.jacobians.models import NsReport
from apps.jacobians.utils.chevalley_weil import chevalley_weil

logger = logging.getLogger(__name__)


def _ns(vector, analytic, elements):
    chi = analytic.character
    direct, via_conjugate = sym_sum_paths(chi, elements)
    size = len(elements)
    n = direct / size
    if n.denominator != 1 or n < 0:
        raise CrossCheckError(f"N = {n} no es un entero no negativo")
    minus_one = any(chi(g) == -analytic.genus for g in elements)
    return NsReport(vector, int(n), direct, via_conjugate, minus_one, size)


def moduli_fixed_dim(vector):
    """N_{S,G}, calculada directamente y por la suma de conjugados."""
    analytic = chevalley_weil(vector)
    report = _ns(vector, analytic, frozenset(range(vector.group.order)))
    logger.info("%s %s: N = %d", vector.group.spec_tag, vector.signature, report.n)
    return report


def nsg_for_subgroup(vector, subgroup):
    """N_{S,H} restringiendo el carácter analítico a ``subgroup``."""
    elements = frozenset(subgroup)
    if subgroup_generated(vector.group, elements) != elements:
        raise InvalidInputError("El conjunto dado no es un subgrupo")
    return _ns(vector, chevalley_weil(vector), elements)


def analytic_character_is_rational_sum(analytic):
    """χ_ρa + conj(χ_ρa) es racional en todo elemento."""
    chi = analytic.character
    total = chi + chi.conj()
    return all(v.rational_part() is not None for v in total.values)
