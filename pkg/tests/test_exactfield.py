from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rotabaxter.errors import DiscriminantMismatch, DivisionByZero
from rotabaxter.exactfield import (QuadExt, field_arith, normalize, parse_field, power, quad,
                                   rational_root, sqrt, to_str)

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
quads = st.builds(lambda a, b: quad(a, b, 5), fractions, fractions)


def test_rational_arithmetic():
    assert field_arith(Fraction(1, 2), "add", Fraction(1, 3)) == Fraction(5, 6)


def test_conjugate_product_is_norm():
    u, v = quad(1, 1, 5), quad(1, -1, 5)
    assert field_arith(u, "mul", v) == -4
    assert isinstance(field_arith(u, "mul", v), Fraction)


def test_inverse_by_conjugate():
    x = quad(Fraction(-1, 2), Fraction(1, 2), 5)
    inv = field_arith(1, "div", x)
    assert inv == quad(Fraction(1, 2), Fraction(1, 2), 5)
    assert inv * x == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        field_arith(quad(1, 1, 2), "div", 0)
    with pytest.raises(ZeroDivisionError):
        field_arith(Fraction(1), "div", Fraction(0))


def test_mixed_radicands_rejected():
    with pytest.raises(DiscriminantMismatch):
        field_arith(sqrt(2), "add", sqrt(3))


@pytest.mark.parametrize("x, r, expected", [(8, 3, Fraction(2)), (2, 2, None), (Fraction(1, 16), 4, Fraction(1, 2)),
                                            (-27, 3, Fraction(-3)), (-4, 2, None), (0, 5, Fraction(0))])
def test_rational_root(x, r, expected):
    assert rational_root(x, r) == expected


def test_quad_demotes_perfect_squares():
    assert quad(1, 2, 9) == 7 and isinstance(quad(1, 2, 9), Fraction)
    assert quad(3, 0, 2) == 3
    assert sqrt(Fraction(4, 9)) == Fraction(2, 3)
    with pytest.raises(ValueError):
        QuadExt(Fraction(1), Fraction(0), Fraction(2))


def test_power_conventions():
    assert power(Fraction(0), 0) == 1
    assert power(sqrt(2), 2) == 2
    assert power(Fraction(2), -2) == Fraction(1, 4)
    with pytest.raises(DivisionByZero):
        power(Fraction(0), -1)


def test_ordering_of_real_quadratics():
    assert sqrt(2) * 3 > 4  # 18 > 16
    assert sqrt(2) * 2 < 3
    assert quad(-1, 1, 2) > 0 > quad(1, -1, 2)
    assert quad(-2, 1, 2) < 0 < quad(2, -1, 2)
    with pytest.raises(TypeError):
        sqrt(-1) > 0


@pytest.mark.parametrize("text", ["3", "-3/4", "1/2+1/2*sqrt(5)", "-1/3-2*sqrt(7)", "0+1*sqrt(2)"])
def test_round_trip(text):
    x = parse_field(text)
    assert parse_field(to_str(x)) == x


def test_parse_shorthand_and_dict():
    assert parse_field("sqrt(2)") == quad(0, 1, 2)
    assert parse_field("-1/2*sqrt(5)") == quad(0, Fraction(-1, 2), 5)
    assert parse_field({"a": "0", "b": "1", "D": "2"}) == sqrt(2)
    assert to_str(sqrt(2)) == "0+1*sqrt(2)"
    with pytest.raises(ValueError):
        parse_field("sqrt(2)+1")


@given(quads, quads, quads)
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(quads)
def test_inverse_property(x):
    if x != 0:
        assert normalize(x * (1 / x)) == 1
    assert normalize(x - x) == 0


@given(quads)
def test_canonical_form(x):
    assert isinstance(x, Fraction) or x.b != 0
    assert normalize(normalize(x)) == x
    assert parse_field(to_str(x)) == x
