"""
Ecuaciones planas de las superficies de la clasificación y generadores de
su grupo de automorfismos, con ω_l = exp(2πi/l) escrito ``w_l``.
"""
from sympy import isprime

from apps.default.exceptions import InvalidInputError
from apps.groups.utils.recognition import least_primitive_fourth_root
from apps.surfaces.models import CurveModel

TAGS = ('C_g', 'X4', 'X4Q', 'X3', 'X2k', 'K_g', 'X8')
ALIASES = {'C': 'C_g', 'K': 'K_g', 'X2': 'X2k'}


def _power(base, exponent):
    if exponent == 1:
        return base
    return f"{base}^{exponent}"


def _product(factors):
    """Producto de factores (base, exponente) omitiendo los de exponente 0."""
    return ''.join(_power(base, e) for base, e in factors if e)


def _phi(q, rho):
    """φ(x) = -(x+i)^{e-ρ} / ((x-i)^{e-1}(x+1)^{ρ-1}) con e = (ρ²+1)/q."""
    e = (rho * rho + 1) // q
    exponents = [('(x+i)', e - rho), ('(x-i)', 1 - e), ('(x+1)', 1 - rho)]
    numerator = _product((base, k) for base, k in exponents if k > 0) or '1'
    denominator = _product((base, -k) for base, k in exponents if k < 0)
    return f"-{numerator}/({denominator})" if denominator else f"-{numerator}"


def _family_c(q):
    return CurveModel(
        'C_g', q, f"y^2=(x^{q}-1)(x^{q}-t)",
        (f"(x,y) -> (w_{q}*x, -y)", f"(x,y) -> (t^(1/{q})/x, t^(1/2)*y/x^{q})"),
        'D_2q', (('t', 't != 0, 1'),),
    )


def _x4(q, rho):
    equation = 'y^{}={}'.format(q, _product([('(x-1)', 1), ('(x-i)', rho), ('(x+1)', q - 1), ('(x+i)', q - rho)]))
    return CurveModel(
        'X4', q, equation,
        (f"(x,y) -> (x, w_{q}*y)", f"(x,y) -> (i*x, phi(x)*y^{rho})", f"phi(x) = {_phi(q, rho)}"),
        'C_q |x4 C_4', rho=rho,
    )


def _x4_rational(q, rho):
    equation = 'y^{}={}'.format(q, _product([('x', 1), ('(x+1)', rho), ('(x-1)', q - rho)]))
    return CurveModel('X4Q', q, equation, (f"(x,y) -> (x, w_{q}*y)",), 'C_q |x4 C_4', rho=rho)


def _x3(q):
    return CurveModel('X3', q, f"y^3=x^{q}-1", (f"(x,y) -> (w_{q}*x, w_3*y)",), 'C_q x C_3')


def _x2k(q):
    return CurveModel(
        'X2k', q, f"y^{q}=x^n_k(x^2-1)",
        (f"(x,y) -> (x, w_{q}*y)", "(x,y) -> (-x, (-1)^n_k*y)"),
        'C_q x C_2',
        (('k', f"1..{(q - 3) // 2}"), ('n_k', f"1..{q - 1}, n_k != {q - 2}")),
    )


def _family_k(q):
    equation = 'y^{}={}'.format(q, _product([('(x-1)', 1), ('(x+1)', q - 1), ('(x-t)', 1), ('(x+t)', q - 1)]))
    return CurveModel(
        'K_g', q, equation,
        (f"(x,y) -> (x, w_{q}*y)", "(x,y) -> (-x, (x^2-1)(x^2-t^2)*y^-1)"),
        'D_q', (('t', 't != 0, 1, -1'),),
    )


def _x8(q):
    return CurveModel(
        'X8', q, f"y^2=x^{2 * q}-1",
        (f"(x,y) -> (w_{2 * q}*x, y)", "(x,y) -> (x, -y)", f"(x,y) -> (1/x, i*y/x^{q})"),
        'AM(q)',
    )


def curve_model(tag, q):
    """
    Modelo de la familia ``tag`` para el primo q. Para X4 y X4Q se usa la
    menor raíz cuarta primitiva ρ de la unidad módulo q.
    """
    tag = ALIASES.get(tag, tag)
    if tag not in TAGS:
        raise InvalidInputError(f"Etiqueta desconocida {tag!r}; opciones: {', '.join(TAGS)}")
    if not isprime(q) or q < 5:
        raise InvalidInputError(f"q debe ser un primo >= 5, se recibió {q}")
    if tag in ('X4', 'X4Q'):
        rho = least_primitive_fourth_root(q)
        if rho is None:
            raise InvalidInputError(f"X4 sólo existe para q ≡ 1 mod 4, se recibió q={q}")
        return (_x4 if tag == 'X4' else _x4_rational)(q, rho)
    builders = {'C_g': _family_c, 'X3': _x3, 'X2k': _x2k, 'K_g': _family_k, 'X8': _x8}
    return builders[tag](q)
