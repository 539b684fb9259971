"""Exact arithmetic in the real fields Q(2cos(pi/L)).

Each field is a sympy domain: QQ when 2cos(pi/L) is rational, QQ.algebraic_field(2cos(pi/L))
otherwise. A Scalar wraps one element of that domain; its residue coefficients in
z = 2cos(pi/L) are only read back for hashing, printing and numeric evaluation.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm

import mpmath
import sympy

from cambrianite.functions import get_setting

Z = sympy.Symbol("z")

RATIONAL_COSINES = {1: Fraction(-1), 2: Fraction(0), 3: Fraction(1, 2)}


class NumberField:
    def __init__(self, conductor):
        self.conductor = conductor
        self.generator_expression = 2 * sympy.cos(sympy.pi / conductor)
        self.minimal_polynomial = sympy.minimal_polynomial(
            self.generator_expression, Z, polys=True
        )
        self.degree = self.minimal_polynomial.degree()
        if self.degree == 1:
            self.domain = sympy.QQ
        else:
            self.domain = sympy.QQ.algebraic_field(self.generator_expression)
        self.zero = Scalar(self, self.domain.zero)
        self.one = Scalar(self, self.domain.one)

    def __repr__(self):
        if self.is_rational:
            return "NumberField(Q)"
        return "NumberField(Q(2cos(pi/{})))".format(self.conductor)

    def __call__(self, value):
        if isinstance(value, Scalar):
            if value.field is self:
                return value
            if value.field.degree == 1:
                return self._constant(value.coeffs[0])
            if self.degree == 1 and value.is_rational():
                return value.field._constant(value.coeffs[0])
            raise ValueError("Cannot move {} into {}".format(value, self))
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (int, Fraction)):
            return self._constant(value)
        if isinstance(value, sympy.Basic):
            return self.from_sympy(value)
        raise TypeError("Cannot convert {!r} to a field element".format(value))

    @property
    def is_rational(self):
        return self.degree == 1

    def element(self, coefficients):
        """The domain element sum c_k z^k, coefficients lowest degree first"""
        values = [sympy.QQ(c.numerator, c.denominator) for c in map(Fraction, coefficients)]
        if self.is_rational:
            return values[0] if values else self.domain.zero
        while values and not values[-1]:
            values.pop()
        return self.domain.new(list(reversed(values)))

    def coefficients(self, element):
        """Residue coefficients of a domain element as Fractions, lowest degree first"""
        if self.is_rational:
            return (_to_fraction(self.domain.to_sympy(element)),)
        values = [_to_fraction(sympy.QQ.to_sympy(c)) for c in reversed(element.to_list())]
        return tuple(values + [Fraction(0)] * (self.degree - len(values)))

    def wrap(self, element):
        return Scalar(self, element)

    def _constant(self, value):
        return Scalar(self, self.element([value]))

    def generator(self):
        """The element z = 2cos(pi/conductor)"""
        if self.is_rational:
            return self(_to_fraction(self.generator_expression))
        return Scalar(self, self.element([0, 1]))

    def two_cos(self, numerator, denominator):
        """2cos(numerator*pi/denominator), which must lie in this field"""
        if (self.conductor * numerator) % denominator:
            raise ValueError(
                "2cos({}pi/{}) is not in {}".format(numerator, denominator, repr(self))
            )
        k = self.conductor * numerator // denominator
        z = self.generator()
        previous, current = self(2), z
        if k == 0:
            return previous
        for _ in range(k - 1):
            previous, current = current, z * current - previous
        return current

    def cos_pi_over(self, m):
        if m in RATIONAL_COSINES:
            return self(RATIONAL_COSINES[m])
        return self.two_cos(1, m) / 2

    def from_sympy(self, expression):
        """A polynomial expression in z, reduced modulo the minimal polynomial"""
        poly = sympy.Poly(sympy.sympify(expression), Z, domain=sympy.QQ)
        remainder = poly.rem(self.minimal_polynomial)
        return Scalar(
            self, self.element([_to_fraction(c) for c in reversed(remainder.all_coeffs())])
        )

    def parse(self, text):
        """Parse "3/2" or a residue string such as "1/2+1/2*z" """
        try:
            expression = sympy.sympify(text.replace("^", "**"), locals={"z": Z})
        except (sympy.SympifyError, SyntaxError) as e:
            raise ValueError("Cannot parse field element {}: {}".format(text, e))
        return self.from_sympy(expression)

    def describe(self):
        if self.is_rational:
            return {"generator": "1", "minimal_polynomial": "z - 1"}
        return {
            "generator": "2*cos(pi/{})".format(self.conductor),
            "minimal_polynomial": str(self.minimal_polynomial.as_expr()),
        }


class Scalar:
    __slots__ = ("field", "rep", "_coeffs")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep
        self._coeffs = None

    @property
    def coeffs(self):
        if self._coeffs is None:
            self._coeffs = self.field.coefficients(self.rep)
        return self._coeffs

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is self.field:
                return other
            return self.field(other)
        if isinstance(other, (int, Fraction)):
            return self.field._constant(other)
        return NotImplemented

    def _lift(self, other):
        """Bring both operands into a common field"""
        if isinstance(other, Scalar) and other.field is not self.field:
            if self.field.degree == 1:
                return other.field(self), other
        return self, self._coerce(other)

    def __add__(self, other):
        left, right = self._lift(other)
        if right is NotImplemented:
            return NotImplemented
        return Scalar(left.field, left.rep + right.rep)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, -self.rep)

    def __sub__(self, other):
        left, right = self._lift(other)
        if right is NotImplemented:
            return NotImplemented
        return Scalar(left.field, left.rep - right.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        left, right = self._lift(other)
        if right is NotImplemented:
            return NotImplemented
        return Scalar(left.field, left.rep * right.rep)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero in {}".format(repr(self.field)))
        return Scalar(self.field, self.field.domain.one / self.rep)

    def __truediv__(self, other):
        left, right = self._lift(other)
        if right is NotImplemented:
            return NotImplemented
        return left * right.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def is_zero(self):
        return not self.rep

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_integer(self):
        return self.is_rational() and self.coeffs[0].denominator == 1

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("{} is not rational".format(self))
        return self.coeffs[0]

    def numeric(self, dps=None):
        if dps is None:
            dps = get_setting("CAMBRIANITE_SIGN_PRECISION", 60)
        with mpmath.workdps(dps):
            z = 2 * mpmath.cos(mpmath.pi / self.field.conductor)
            value = mpmath.mpf(0)
            power = mpmath.mpf(1)
            for c in self.coeffs:
                value += mpmath.mpf(c.numerator) / c.denominator * power
                power *= z
            return +value

    def sign(self):
        if self.is_rational():
            c = self.coeffs[0]
            return (c > 0) - (c < 0)
        dps = get_setting("CAMBRIANITE_SIGN_PRECISION", 60)
        for attempt in range(3):
            value = self.numeric(dps)
            if abs(value) > mpmath.mpf(10) ** (-(dps - 10)):
                return 1 if value > 0 else -1
            dps *= 4
        raise ArithmeticError("Could not decide the sign of {}".format(self))

    def __eq__(self, other):
        left, right = self._lift(other)
        if right is NotImplemented:
            return NotImplemented
        return left.rep == right.rep

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        if self.is_rational():
            return float(self.coeffs[0])
        return float(self.numeric(30))

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            monomial = "z" if power == 1 else "z**{}".format(power)
            if power == 0:
                term = str(c)
            elif c == 1:
                term = monomial
            elif c == -1:
                term = "-" + monomial
            else:
                term = "{}*{}".format(c, monomial)
            if terms and not term.startswith("-"):
                term = "+" + term
            terms.append(term)
        return "".join(terms)

    def __repr__(self):
        return "Scalar({})".format(self)


def _to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=None)
def number_field(conductor=1):
    return NumberField(conductor)


def field_for_orders(orders):
    """Smallest Q(2cos(pi/L)) holding cos(pi/m) for every order m"""
    conductor = 1
    for m in orders:
        if m >= 4:
            conductor = lcm(conductor, m)
    return number_field(conductor)


def rationals():
    return number_field(1)
