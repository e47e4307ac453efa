"""Groebner bases: uniqueness, the Buchberger post-check, membership."""

import random

from brmult.fields import QQ, PrimeField
from brmult.groebner import (
    GroebnerBasis,
    buchberger_criterion_holds,
    groebner,
    truncated_degree_counts,
)
from brmult.orders import GREVLEX, LEX
from brmult.poly import parse, parse_many

fp = PrimeField()


def test_reduced_basis_of_intersection_pair():
    gb = groebner(parse_many("x^2 - y, x*y - 1"))
    assert buchberger_criterion_holds(gb)
    # y^3 = (xy)^2 y / x^2 ... the basis must expose a pure y power
    assert any(le[0] == 0 for le in gb.leading_exponents())


def test_monomial_ideal_basis_is_itself():
    gb = groebner(parse_many("x^3, x*y, y^2"))
    assert sorted(str(p) for p in gb.elements) == ["x*y", "x^3", "y^2"]


def test_shuffle_invariance_small():
    gens = parse_many("x^3 - y^2, x^2*y + x, y^3 - x")
    reference = groebner(gens)
    rng = random.Random(5)
    for _ in range(10):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert groebner(shuffled) == reference


def test_scaling_invariance():
    gens = parse_many("2*x^2 - 4*y, 3*x*y - 6")
    scaled = [p.scale(QQ.coerce(7)) for p in gens]
    assert groebner(gens) == groebner(scaled)


def test_membership_by_construction():
    gens = parse_many("x^2 + y, y^3 - x", fp)
    gb = groebner(gens)
    rng = random.Random(11)
    for _ in range(20):
        f = sum(
            (
                parse(f"{rng.randint(1, 96)}*x^{rng.randint(0, 2)}*"
                      f"y^{rng.randint(0, 2)}", fp) * g
                for g in gens
            ),
            parse("0", fp),
        )
        assert gb.contains(f)
        assert not gb.contains(f + parse("1", fp))


def test_normal_form_is_idempotent_and_congruent():
    gb = groebner(parse_many("x^2 - y, y^2 - x"))
    f = parse("x^3 + x*y + 1")
    nf = gb.normal_form(f)
    assert gb.normal_form(nf) == nf
    assert gb.contains(f - nf)


def test_standard_monomials_count_quotient():
    gb = groebner(parse_many("x^2, x*y, y^3"))
    mons = gb.standard_monomials()
    assert sorted(m.exps for m in mons) == [(0, 0), (0, 1), (0, 2), (1, 0)]


def test_lex_eliminates():
    # resultant-style elimination: the lex basis of (x^2 - y, x*y - 1)
    # contains a polynomial in y alone
    gb = groebner(parse_many("x^2 - y, x*y - 1"), order=LEX)
    assert any(le[0] == 0 for le in gb.leading_exponents())
    assert buchberger_criterion_holds(gb)


def test_prime_field_agrees_with_rationals_on_leads():
    gens_q = parse_many("x^3 - y^2, x*y^2 - x")
    gens_p = parse_many("x^3 - y^2, x*y^2 - x", fp)
    lead_q = sorted(groebner(gens_q).leading_exponents())
    lead_p = sorted(groebner(gens_p).leading_exponents())
    assert lead_q == lead_p


def test_truncated_degree_counts_match_full_quotient():
    polys = parse_many("x^2, y^2", fp)
    counts = truncated_degree_counts(polys, 6)
    # staircase of (x^2, y^2): 1, x, y, xy
    assert sum(counts[:5]) == 4


def test_empty_and_unit():
    assert len(groebner([])) == 0
    gb = groebner(parse_many("x, y, 1"))
    assert gb.is_unit_ideal()
