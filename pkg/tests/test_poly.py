"""Polynomial arithmetic and parsing over both coefficient fields."""

from fractions import Fraction

import pytest

from brmult.errors import ArityMismatch, FieldMismatch, ParseError
from brmult.fields import QQ, PrimeField
from brmult.poly import Monomial, Polynomial, format_monomial, parse, parse_many

fp = PrimeField()


def test_parse_round_trip():
    p = parse("x^2*y + 3*x - 1/2")
    assert str(p) == "x^2*y + 3*x - 1/2"
    assert p.field == QQ


def test_parse_signs_and_powers():
    p = parse("-x^3 + 2*y^2 - y^2")
    assert p == parse("y^2 - x^3")


def test_parse_prime_field_coeffs():
    p = parse("5*x + 7", fp)
    assert all(isinstance(c, int) for _, c in p.terms)


def test_parse_rejects_garbage():
    for bad in ("", "x +", "x^", "2/0", "x*z^2*w", "x??"):
        with pytest.raises(ParseError):
            parse(bad)


def test_parse_many_splits_on_commas():
    polys = parse_many("x^2, x*y, y^2")
    assert len(polys) == 3
    assert [str(p) for p in polys] == ["x^2", "x*y", "y^2"]


def test_arithmetic_matches_hand_expansion():
    x = parse("x")
    y = parse("y")
    assert (x + y) * (x - y) == parse("x^2 - y^2")
    assert (x + y) ** 3 == parse("x^3 + 3*x^2*y + 3*x*y^2 + y^3")


def test_arithmetic_mod_p():
    p = PrimeField(7)
    f = parse("x + y", p)
    # binomial coefficients vanish mod 7
    assert f**7 == parse("x^7 + y^7", p)


def test_mixed_fields_refuse():
    with pytest.raises(FieldMismatch):
        parse("x") + parse("x", fp)


def test_zero_and_constants():
    z = Polynomial.zero()
    assert z.is_zero()
    one = Polynomial.constant(1)
    assert (z + one) == one
    assert (one - one).is_zero()


def test_from_monomial():
    m = Polynomial.from_monomial((2, 1))
    assert str(m) == "x^2*y"
    assert m.is_monomial()


def test_monomial_lattice():
    a = Monomial((2, 1))
    b = Monomial((1, 3))
    assert a.lcm(b).exps == (2, 3)
    assert a.gcd(b).exps == (1, 1)
    assert not a.divides(b)
    assert Monomial((1, 1)).divides(a)
    with pytest.raises(ArityMismatch):
        a.divides(Monomial((1,)))


def test_format_monomial():
    assert format_monomial((0, 0)) == "1"
    assert format_monomial((1, 2)) == "x*y^2"


def test_fraction_coefficients_survive():
    p = parse("1/3*x + 1/6*x")
    ((_, c),) = p.terms
    assert c == Fraction(1, 2)
