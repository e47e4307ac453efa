"""Hilbert-Samuel multiplicity: three routes that must not disagree."""

import random

import pytest

from brmult.errors import GenericityFailure, NotMPrimary
from brmult.fields import QQ, PrimeField
from brmult.ideals import Ideal
from brmult.multiplicity import minimal_reduction, multiplicity
from brmult.sampling import GeneralSampler, random_monomial_ideal

fp = PrimeField()


def test_known_values_every_route():
    m2 = Ideal.parse("x^2, x*y, y^2", fp)
    for route in ("reduction", "difference", "newton"):
        assert multiplicity(m2, route=route).value == 4
    rep = multiplicity(m2, route="all")
    assert rep.value == 4
    assert rep.by_route == {"reduction": 4, "difference": 4, "newton": 4}


def test_complete_intersection_is_its_own_reduction():
    a = Ideal.parse("x^3, y^4", fp)
    cert = minimal_reduction(a, GeneralSampler(0, fp))
    assert cert.ideal is a and cert.colength == 12


def test_reduction_drops_to_two_generators():
    a = Ideal.parse("x^2, x*y, y^3", fp)
    cert = minimal_reduction(a, GeneralSampler(1, fp))
    assert len(cert.ideal.gens) == 2
    assert cert.colength == multiplicity(a, route="newton").value == 6


def test_routes_agree_on_random_monomial_ideals():
    rng = random.Random(9)
    sampler = GeneralSampler(9, fp)
    for _ in range(10):
        a = Ideal.from_monomial(random_monomial_ideal(rng, max_exp=7), fp)
        rep = multiplicity(a, route="all", sampler=sampler)
        assert len(set(rep.by_route.values())) == 1


def test_routes_agree_on_non_monomial_input():
    a = Ideal.parse("x^2 + y^3, x*y^2, y^4", fp)
    rep = multiplicity(a, route="all", sampler=GeneralSampler(2, fp))
    # no newton entry without monomial generators
    assert set(rep.by_route) == {"reduction", "difference"}
    assert rep.value == rep.by_route["reduction"]


def test_rational_field_matches_prime_field():
    for gens in ("x^2, x*y, y^2", "x^3, x*y, y^3"):
        vq = multiplicity(Ideal.parse(gens, QQ), route="reduction",
                          sampler=GeneralSampler(3, QQ)).value
        vp = multiplicity(Ideal.parse(gens, fp), route="reduction",
                          sampler=GeneralSampler(3, fp)).value
        assert vq == vp


def test_newton_refuses_mixed_generators():
    with pytest.raises(ValueError):
        multiplicity(Ideal.parse("x^2 + y, y^2", fp), route="newton")


def test_non_primary_input_raises():
    with pytest.raises((NotMPrimary, GenericityFailure)):
        multiplicity(Ideal.parse("x^2, x*y", fp), route="reduction",
                     sampler=GeneralSampler(0, fp))


def test_multiplicity_bounds_colength():
    # e(a) >= colength for integrally closed m-primary ideals, equality
    # exactly for complete intersections; spot-check the inequality
    rng = random.Random(12)
    for _ in range(10):
        mono = random_monomial_ideal(rng, max_exp=6).integral_closure()
        assert mono.newton_multiplicity() >= mono.colength()
