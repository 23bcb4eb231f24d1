"""
Aritmética exacta en cuerpos ciclotómicos Q(ζ_n).

Un ``CycNum`` guarda el conductor ``n`` y los coeficientes del valor en la
base 1, ζ, ..., ζ^{φ(n)-1}, es decir, el polinomio reducido módulo el
polinomio ciclotómico Φ_n. Los coeficientes se almacenan como enteros con un
denominador común positivo, lo que hace la forma canónica y la igualdad
decidible.
"""
import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import Poly, cyclotomic_poly, symbols, totient

from apps.default.exceptions import InvalidInputError

_X = symbols('x')
_TEXT_RE = re.compile(r'cyc\((\d+)\)\[(.*)\]$')


def euler_phi(n):
    return int(totient(n))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coeficientes enteros de Φ_n, de grado bajo a alto."""
    coeffs = Poly(cyclotomic_poly(n, _X), _X).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def _power_table(n):
    """Reducción de x^j módulo Φ_n para j = 0..n-1."""
    phi = cyclotomic_polynomial(n)
    degree = len(phi) - 1
    rows = []
    current = [0] * degree
    current[0] = 1
    for _ in range(n):
        rows.append(tuple(current))
        # multiplicar por x y reducir el término de grado `degree`
        top = current[-1]
        current = [0] + current[:-1]
        if top:
            for i in range(degree):
                current[i] -= top * phi[i]
    return tuple(rows)


def _reduce(n, poly):
    """Reduce un polinomio entero (lista de coeficientes en ζ_n) módulo Φ_n."""
    table = _power_table(n)
    out = [0] * len(table[0])
    for j, c in enumerate(poly):
        if c:
            row = table[j % n]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return out


def _normalize(num, den):
    if den < 0:
        num, den = [-c for c in num], -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        num, den = [c // g for c in num], den // g
    return tuple(num), den


@dataclass(frozen=True, eq=False)
class CycNum:
    conductor: int
    num: tuple
    den: int = 1

    # Constructores

    @classmethod
    def rational(cls, n, value=0):
        value = Fraction(value)
        num = [0] * euler_phi(n)
        num[0] = value.numerator
        return cls(n, tuple(num), value.denominator)

    @classmethod
    def zeta(cls, n, k=1):
        return cls(n, _power_table(n)[k % n], 1)

    @classmethod
    def from_exponents(cls, n, exponents, den=1):
        """
        Suma Σ ζ_n^e sobre ``exponents``.

        ``exponents`` puede ser un iterable de exponentes o un diccionario
        exponente -> multiplicidad.
        """
        counts = [0] * n
        items = exponents.items() if isinstance(exponents, dict) else ((e, 1) for e in exponents)
        for e, mult in items:
            counts[e % n] += mult
        num, den = _normalize(_reduce(n, counts), den)
        return cls(n, num, den)

    @classmethod
    def parse(cls, text):
        match = _TEXT_RE.match(text.replace(' ', ''))
        if not match:
            raise InvalidInputError(f"Texto ciclotómico inválido: {text!r}")
        n = int(match.group(1))
        coeffs = [Fraction(c) for c in match.group(2).split(',') if c]
        if len(coeffs) != euler_phi(n):
            raise InvalidInputError(f"Se esperaban {euler_phi(n)} coeficientes para cyc({n})")
        den = lcm(*(c.denominator for c in coeffs))
        return cls(n, *_normalize([int(c * den) for c in coeffs], den))

    # Conversión de conductor

    def lift(self, m):
        """Mismo valor expresado en Q(ζ_m); ``m`` debe ser múltiplo del conductor."""
        if m == self.conductor:
            return self
        if m % self.conductor:
            raise InvalidInputError(f"{m} no es múltiplo de {self.conductor}")
        step = m // self.conductor
        poly = [0] * m
        for j, c in enumerate(self.num):
            poly[(j * step) % m] += c
        return CycNum(m, *_normalize(_reduce(m, poly), self.den))

    def _unify(self, other):
        if not isinstance(other, CycNum):
            other = CycNum.rational(self.conductor, other)
        m = lcm(self.conductor, other.conductor)
        return self.lift(m), other.lift(m)

    # Aritmética

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = CycNum.rational(self.conductor, other)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._unify(other)
        den = lcm(a.den, b.den)
        num = [x * (den // a.den) + y * (den // b.den) for x, y in zip(a.num, b.num)]
        return CycNum(a.conductor, *_normalize(num, den))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.conductor, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Fraction(other)
            num = [c * other.numerator for c in self.num]
            return CycNum(self.conductor, *_normalize(num, self.den * other.denominator))
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._unify(other)
        n = a.conductor
        product = [0] * (2 * len(a.num))
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        product[i + j] += x * y
        return CycNum(n, *_normalize(_reduce(n, product), a.den * b.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("División por cero en Q(ζ_n)")
            return self * (1 / Fraction(other))
        if isinstance(other, CycNum):
            return self * other.inverse()
        return NotImplemented

    def inverse(self):
        """Inverso vía la norma: a^{-1} = Π_{σ≠1} σ(a) / N(a)."""
        if self.is_zero():
            raise ZeroDivisionError("Cero no es invertible")
        n = self.conductor
        rest = CycNum.rational(n, 1)
        for k in range(2, n):
            if gcd(k, n) == 1:
                rest = rest * self.galois(k)
        norm = (self * rest).rational_part()
        return rest * (1 / norm)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNum.rational(self.conductor, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.rational_part() == other
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._unify(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        # consistente con __eq__ entre conductores: sólo los racionales se distinguen
        value = self.rational_part()
        return hash(value) if value is not None else hash('cyc')

    # Galois y proyecciones

    def galois(self, k):
        """Automorfismo ζ_n -> ζ_n^k."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise InvalidInputError(f"{k} no es una unidad módulo {n}")
        poly = [0] * n
        for j, c in enumerate(self.num):
            if c:
                poly[(j * k) % n] += c
        return CycNum(n, *_normalize(_reduce(n, poly), self.den))

    def conj(self):
        return self.galois(-1)

    def to_complex(self):
        n = self.conductor
        total = sum(c * cmath.exp(2j * cmath.pi * j / n) for j, c in enumerate(self.num) if c)
        return complex(total) / self.den

    def rational_part(self):
        """El valor racional si lo es; ``None`` en otro caso."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def is_zero(self):
        return not any(self.num)

    @property
    def coeffs(self):
        return tuple(Fraction(c, self.den) for c in self.num)

    def key(self):
        """Clave hashable exacta; sólo comparable entre valores del mismo conductor."""
        return (self.conductor, self.num, self.den)

    # Presentación

    @property
    def text(self):
        return f"cyc({self.conductor})[{','.join(str(c) for c in self.coeffs)}]"

    def render(self):
        z = self.to_complex()
        real = 0.0 if abs(z.real) < 5e-13 else z.real
        imag = 0.0 if abs(z.imag) < 5e-13 else z.imag
        if imag == 0.0:
            return f"{real:.12g}"
        sign = '+' if imag > 0 else '-'
        return f"{real:.12g}{sign}{abs(imag):.12g}i"

    def __repr__(self):
        return self.text

    __str__ = render
