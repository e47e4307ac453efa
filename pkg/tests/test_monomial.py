"""Staircase combinatorics: colengths, Newton areas, closures, Fittings."""

import random

import pytest

from brmult.errors import NotIntegrallyClosed, NotMPrimary
from brmult.fields import QQ, PrimeField
from brmult.monomial import (
    MonomialIdeal,
    colength_by_fittings,
    hb_fitting,
    hilbert_burch,
    staircase_points,
)
from brmult.sampling import random_monomial_ideal

fp = PrimeField()


def brute_colength(a: MonomialIdeal) -> int:
    top = max(max(e) for e in a.gens) + 1
    return sum(
        1
        for i in range(top)
        for j in range(top)
        if not a.contains_exponent((i, j))
    )


def test_colength_against_brute_force():
    rng = random.Random(1)
    for _ in range(25):
        a = random_monomial_ideal(rng, max_gens=5, max_exp=9)
        assert a.colength() == brute_colength(a)


def test_colength_hand_values():
    assert MonomialIdeal([(2, 0), (1, 1), (0, 2)]).colength() == 3
    assert MonomialIdeal([(2, 0), (0, 3)]).colength() == 6
    assert MonomialIdeal([(3, 0), (1, 1), (0, 3)]).colength() == 5


def test_not_primary_has_no_finite_colength():
    from brmult.monomial import INFINITE

    assert MonomialIdeal([(2, 0), (1, 1)]).colength() is INFINITE


def test_newton_multiplicity_hand_values():
    # complete intersections: e = product of the axis intercepts
    assert MonomialIdeal([(2, 0), (0, 3)]).newton_multiplicity() == 6
    # m: the unit triangle
    assert MonomialIdeal([(1, 0), (0, 1)]).newton_multiplicity() == 1
    # interior generator above the hull changes nothing
    a = MonomialIdeal([(3, 0), (2, 2), (0, 3)])
    b = MonomialIdeal([(3, 0), (0, 3)])
    assert a.newton_multiplicity() == b.newton_multiplicity() == 9


def test_newton_needs_primary():
    with pytest.raises(NotMPrimary):
        MonomialIdeal([(2, 1), (0, 3)]).newton_multiplicity()


def test_hull_drops_points_above():
    a = MonomialIdeal([(4, 0), (2, 3), (0, 5)])
    # (2, 3) lies above the segment from (0,5) to (4,0)
    assert a.newton_hull() == [(0, 5), (4, 0)]
    b = MonomialIdeal([(4, 0), (2, 2), (0, 5)])
    assert b.newton_hull() == [(0, 5), (2, 2), (4, 0)]


def test_integral_closure_fills_the_hull():
    a = MonomialIdeal([(2, 0), (0, 3)])
    closed = a.integral_closure()
    assert closed == MonomialIdeal([(2, 0), (1, 2), (0, 3)])
    assert closed.is_integrally_closed()
    assert not a.is_integrally_closed()
    assert closed.integral_closure() == closed


def test_closure_preserves_newton_multiplicity():
    rng = random.Random(2)
    for _ in range(20):
        a = random_monomial_ideal(rng, max_gens=5, max_exp=8)
        closed = a.integral_closure()
        assert closed.contains(a)
        assert a.newton_multiplicity() == closed.newton_multiplicity()
        assert closed.colength() <= a.colength()


def test_hilbert_burch_minors_recover_the_ideal():
    a = MonomialIdeal([(3, 0), (2, 1), (1, 3), (0, 4)])
    rows = hilbert_burch(a, fp)
    n = len(a.gens) - 1
    assert len(rows) == n + 1 and all(len(r) == n for r in rows)
    from brmult.matrices import minors

    gens = minors([list(r) for r in rows], n)
    got = MonomialIdeal.from_polys([g if not g.is_zero() else g for g in gens if not g.is_zero()])
    assert got == a


def test_hb_fitting_first_is_whole_ideal():
    # the maximal minors of the staircase matrix recover the ideal
    a = MonomialIdeal([(2, 0), (1, 1), (0, 2)])
    assert hb_fitting(a, 1) == a
    assert hb_fitting(a, 0) is None  # rank one, zeroth Fitting vanishes


def test_colength_by_fittings_on_closed_ideals():
    # m^2 by hand: F_1 = m gives e 1... the report checks itself, the
    # test pins the headline numbers
    rep = colength_by_fittings(MonomialIdeal([(2, 0), (1, 1), (0, 2)]))
    assert rep.colength == 3 and rep.value == 3
    assert rep.terms[0] == 4  # leading term is e(a) itself

    rng = random.Random(4)
    for _ in range(12):
        closed = random_monomial_ideal(rng, max_gens=5, max_exp=9).integral_closure()
        rep = colength_by_fittings(closed)
        assert rep.value == closed.colength()


def test_colength_by_fittings_refuses_open_ideals():
    with pytest.raises(NotIntegrallyClosed):
        colength_by_fittings(MonomialIdeal([(2, 0), (0, 3)]))


def test_staircase_points():
    pts = staircase_points(MonomialIdeal([(2, 0), (0, 2)]))
    assert set(pts) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_lattice_ops():
    a = MonomialIdeal([(2, 0), (0, 2)])
    b = MonomialIdeal([(1, 1)])
    assert a.add(b).colength() == 3
    assert a.intersect(b) == MonomialIdeal([(2, 1), (1, 2)])
    assert a.mul(b) == MonomialIdeal([(3, 1), (1, 3)])
    assert a.colon(b) == MonomialIdeal([(1, 0), (0, 1)])
    assert a.power(2) == MonomialIdeal([(4, 0), (2, 2), (0, 4)])


def test_to_polys_round_trip():
    a = MonomialIdeal([(2, 0), (1, 1), (0, 2)])
    for field in (QQ, fp):
        assert MonomialIdeal.from_polys(a.to_polys(field)) == a
