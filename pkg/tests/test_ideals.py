"""Ideal colengths, quotients and powers, cross-checked between backends."""

import random

import pytest

from brmult.errors import NonFiniteColength
from brmult.fields import QQ, PrimeField
from brmult.ideals import (
    Ideal,
    exact_quotient,
    maximal_ideal,
    screened_primary,
)
from brmult.monomial import MonomialIdeal
from brmult.poly import parse
from brmult.sampling import random_monomial_ideal

fp = PrimeField()


def test_colength_monomial_fast_path():
    a = Ideal.parse("x^2, x*y, y^2")
    assert a.colength() == 3
    assert Ideal.parse("x^3, y^5").colength() == 15


def test_colength_backends_agree_on_twisted_gens():
    # not monomial after the change of generators, same quotient
    a = Ideal.parse("x^2 + y^2, x*y, y^3", fp)
    assert a.colength(method="linear") == a.colength(method="groebner")


def test_colength_backends_agree_on_random_monomial_twists():
    rng = random.Random(3)
    for _ in range(8):
        mono = random_monomial_ideal(rng, max_gens=4, max_exp=6)
        gens = mono.to_polys(fp)
        # mix the generators so the monomial shortcut cannot trigger
        mixed = [gens[0] + gens[-1]] + gens
        a = Ideal(mixed, fp)
        assert a.colength(method="linear") == a.colength(method="groebner")


def test_colength_rational_field():
    a = Ideal.parse("x^2 - y^3, y^4")
    assert a.colength() == 8
    assert Ideal.parse("x^2 - y^3, y^4", fp).colength() == 8


def test_infinite_colength_raises():
    with pytest.raises(NonFiniteColength):
        Ideal.parse("x^2, x*y", fp).colength()


def test_colon_monomial_and_general():
    a = Ideal.parse("x^3, y^3")
    b = Ideal.parse("x")
    c = a.colon(b)
    assert c.monomial_form() == MonomialIdeal([(2, 0), (0, 3)])
    # (f) : (f) = (1) for a nonzerodivisor
    f = parse("x^2 + y^3", fp)
    assert Ideal([f], fp).colon(f).contains(parse("1", fp))


def test_colon_undoes_linkage_product():
    # b = (x^3, y^3) inside a = b + (x*y); a and b : a are linked
    a = Ideal.parse("x^3, x*y, y^3", fp)
    b = Ideal.parse("x^3, y^3", fp)
    c = b.colon(a)
    assert b.colon(c).equals(a)
    assert a.colength() + c.colength() == b.colength()


def test_power_of_monomial_ideal():
    m = maximal_ideal()
    assert m.power(2).colength() == 3
    assert m.power(5).colength() == 15


def test_power_general():
    a = Ideal.parse("x^2 - y, y^2", fp)
    # colength is additive along powers of a complete intersection:
    # ell(R/a^n) = ell(R/a) * n(n+1)/2 for a 2-generated a
    assert a.power(2).colength() == 3 * a.colength()


def test_equals_sees_through_generators():
    a = Ideal.parse("x^2, y^2", fp)
    b = Ideal.parse("x^2 + y^2, y^2, x^2", fp)
    assert a.equals(b)
    assert not a.equals(Ideal.parse("x^2, y^3", fp))


def test_mingens_count():
    assert Ideal.parse("x^2, x*y, y^2", fp).mingens_count() == 3
    assert Ideal.parse("x^3, y^5", fp).mingens_count() == 2
    # a redundant generator does not change mu
    assert Ideal.parse("x^3, y^5, x^3 + y^5", fp).mingens_count() == 2


def test_screened_primary():
    assert screened_primary(Ideal.parse("x^2, y^2", fp))
    assert not screened_primary(Ideal.parse("x^2, x*y", fp))
    assert screened_primary(Ideal.parse("x^2 + y^5, y^3", fp))


def test_exact_quotient():
    p = parse("x^3*y + x^2*y^2")
    f = parse("x^2*y")
    assert exact_quotient(p, f) == parse("x + y")
    with pytest.raises(ArithmeticError):
        exact_quotient(parse("x + 1"), parse("y"))


def test_contains_over_both_fields():
    for field in (QQ, fp):
        a = Ideal.parse("x^2 - y, y^2", field)
        assert a.contains(parse("x^4", field))
        assert not a.contains(parse("x", field))
