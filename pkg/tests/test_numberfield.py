from fractions import Fraction

import pytest
from sympy import QQ
from sympy.polys.domains import AlgebraicField

from cambrianite.numberfield import field_for_orders, number_field, rationals


def test_golden_field():
    field = number_field(5)
    z = field.generator()
    assert field.degree == 2
    assert z * z == z + 1
    assert str(1 / z) == "-1+z"
    assert str(field.cos_pi_over(5)) == "1/2*z"
    assert str(field.two_cos(2, 5)) == "-1+z"
    with pytest.raises(ValueError):
        field.two_cos(1, 3)


def test_parse_and_print():
    field = number_field(5)
    assert str(field.parse("1/2+z")) == "1/2+z"
    assert field("z**2") == field("1+z")
    assert str(field(Fraction(3, 4))) == "3/4"
    with pytest.raises(ValueError):
        field.parse("1/2+")


def test_signs_are_exact_enough():
    field = number_field(5)
    z = field.generator()
    assert (z - 2).sign() == -1
    assert z > 1
    assert abs(1 - z) == z - 1
    assert float(z) == pytest.approx(1.6180339887)


def test_rationals():
    q = rationals()
    assert q.is_rational
    assert q(3).is_integer()
    assert not q(Fraction(3, 2)).is_integer()
    assert q(Fraction(1, 2)).to_fraction() == Fraction(1, 2)
    assert hash(q(3)) == hash(3)
    assert q.describe() == {"generator": "1", "minimal_polynomial": "z - 1"}
    with pytest.raises(ValueError):
        number_field(5).generator().to_fraction()


def test_field_for_orders():
    assert field_for_orders({2, 3}).is_rational
    assert field_for_orders({3, 5}).conductor == 5
    assert field_for_orders({4, 6}).conductor == 12
    assert field_for_orders({5}) is number_field(5)


def test_elements_live_in_sympy_domains():
    field = number_field(5)
    assert isinstance(field.domain, AlgebraicField)
    z = field.generator()
    assert field.coefficients(z.rep) == (Fraction(0), Fraction(1))
    assert (z * z).rep == (z + 1).rep
    assert (z.inverse() * z).rep == field.domain.one
    assert z.inverse() == z - 1
    assert rationals().domain == QQ
    with pytest.raises(ZeroDivisionError):
        field.zero.inverse()


def test_mixed_fields_meet_in_the_larger_one():
    field = number_field(5)
    half = rationals()(Fraction(1, 2))
    total = half + field.generator()
    assert total.field is field
    assert str(total) == "1/2+z"
    assert half * 2 == field.one
    assert {field(3), rationals()(3)} == {3}
