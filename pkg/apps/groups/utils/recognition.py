"""
Nombres de las familias conocidas de grupos de orden λq.
"""
from apps.default.exceptions import InvalidInputError
from apps.groups.managers.group_builder import build_group
from apps.groups.utils.isomorphism import are_isomorphic


def least_primitive_fourth_root(q):
    """Menor ρ con ρ^2 = -1 mod q, o None si q ≢ 1 mod 4."""
    for rho in range(2, q):
        if rho * rho % q == q - 1:
            return rho
    return None


def known_families(q, lam):
    """Pares (nombre, descriptor) de las familias conocidas de orden λq."""
    families = []
    if lam == 1:
        families.append(('C_q', f"C{q}"))
    elif lam == 2:
        families += [('C_q x C_2', f"C{q}xC2"), ('D_q', f"D{q}")]
    elif lam == 3:
        families.append(('C_q x C_3', f"C{q}xC3"))
    elif lam == 4:
        families += [
            ('C_4q', f"C{4 * q}"),
            ('C_q x C_2^2', f"C{q}xC2xC2"),
            ('D_2q', f"D{2 * q}"),
            ('C_q |x2 C_4', f"CqC4:q={q},rho={q - 1}"),
        ]
        rho = least_primitive_fourth_root(q)
        if rho is not None:
            families.append(('C_q |x4 C_4', f"CqC4:q={q},rho={rho}"))
    elif lam == 8:
        families.append(('AM(q)', f"AM:q={q}"))
    if lam >= 5:
        families.append((f"C_{lam}q", f"C{lam * q}"))
    return families


def recognize(group, q):
    """
    Nombre de ``group`` entre las familias conocidas de orden λq, o una
    etiqueta estructural ``C_q |x K[...]`` si no es ninguna de ellas.
    """
    if group.order % q:
        raise InvalidInputError(f"El orden {group.order} no es múltiplo de {q}")
    lam = group.order // q
    for name, spec in known_families(q, lam):
        if are_isomorphic(group, build_group(spec)):
            return name
    return group.spec_tag.replace(f"C{q}:", "C_q |x ", 1) if group.spec_tag.startswith(f"C{q}:") else group.spec_tag
