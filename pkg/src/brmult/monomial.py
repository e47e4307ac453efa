"""Monomial ideals in two variables: staircases, Newton polygons, closures.

Everything here is exact lattice combinatorics with no Groebner step, which
makes this module the independent cross-check for the general-purpose
colength and multiplicity routines.  Ideals are kept in staircase form: the
minimal generating exponents sorted by x-degree, which is unique, so
equality is plain tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import NotIntegrallyClosed, NotMPrimary, VerificationError
from .groebner import INFINITE, _minimal_exponents
from .poly import Monomial, Polynomial


class MonomialIdeal:
    """Staircase form of a nonzero monomial ideal in k[x,y]."""

    __slots__ = ("gens",)

    def __init__(self, exponents):
        exps = _minimal_exponents([tuple(e) for e in exponents])
        if not exps:
            raise ValueError("monomial ideal needs at least one generator")
        self.gens = tuple(sorted(exps))

    @classmethod
    def from_polys(cls, polys) -> "MonomialIdeal":
        exps = []
        for p in polys:
            if p.is_zero():
                continue
            if not p.is_monomial():
                raise ValueError(f"not a monomial generator: {p}")
            exps.append(p.terms[0][0][:2])
        return cls(exps)

    def to_polys(self, field) -> list[Polynomial]:
        return [Polynomial.from_monomial(e, field) for e in self.gens]

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        gens = ", ".join(str(Monomial(e)) for e in self.gens)
        return f"MonomialIdeal({gens})"

    def is_unit(self) -> bool:
        return self.gens[0] == (0, 0)

    def is_m_primary(self) -> bool:
        # Staircase order puts a pure y-power first and a pure x-power last.
        return self.gens[0][0] == 0 and self.gens[-1][1] == 0

    def contains_exponent(self, e) -> bool:
        return any(g[0] <= e[0] and g[1] <= e[1] for g in self.gens)

    def contains(self, other: "MonomialIdeal") -> bool:
        return all(self.contains_exponent(g) for g in other.gens)

    # Ideal arithmetic.  All of it stays inside staircase form.

    def add(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.gens + other.gens)

    def mul(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(
            [(a[0] + b[0], a[1] + b[1]) for a in self.gens for b in other.gens]
        )

    def power(self, n: int) -> "MonomialIdeal":
        if n < 0:
            raise ValueError("negative ideal power")
        if n == 0:
            return MonomialIdeal([(0, 0)])
        out = self
        for _ in range(n - 1):
            out = out.mul(self)
        return out

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(
            [
                (max(a[0], b[0]), max(a[1], b[1]))
                for a in self.gens
                for b in other.gens
            ]
        )

    def colon_exponent(self, e) -> "MonomialIdeal":
        return MonomialIdeal(
            [(max(g[0] - e[0], 0), max(g[1] - e[1], 0)) for g in self.gens]
        )

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        out = None
        for e in other.gens:
            piece = self.colon_exponent(e)
            out = piece if out is None else out.intersect(piece)
        return out

    def colength(self):
        """Number of standard monomials, or INFINITE when m-primariness fails."""
        if not self.is_m_primary():
            return INFINITE
        total = 0
        prev_b = self.gens[0][1]
        for a, b in self.gens[1:]:
            total += a * (prev_b - b)
            prev_b = b
        return total

    def newton_hull(self) -> list[tuple[int, int]]:
        """Vertices of the lower boundary of the Newton polygon, x ascending."""
        if not self.is_m_primary():
            raise NotMPrimary(f"unbounded Newton region: {self!r}")
        hull: list[tuple[int, int]] = []
        for p in self.gens:
            while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
                hull.pop()
            hull.append(p)
        return hull

    def newton_multiplicity(self) -> int:
        """Twice the area cut off below the Newton polygon.

        Equals the multiplicity of the ideal whenever the generic-coefficient
        ideal on the same staircase is taken; for integrally closed monomial
        ideals it equals the multiplicity outright.
        """
        if self.is_unit():
            return 0
        hull = self.newton_hull()
        poly = [(0, 0)] + hull + [(0, 0)]
        twice = 0
        for (x1, y1), (x2, y2) in zip(poly, poly[1:]):
            twice += x1 * y2 - x2 * y1
        return abs(twice)

    def integral_closure(self) -> "MonomialIdeal":
        """Smallest staircase whose exponents all lie on or above the hull."""
        hull = self.newton_hull()
        exps = list(self.gens)
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
            dx = x2 - x1
            for u in range(x1, x2 + 1):
                v = y1 * (x2 - u) + y2 * (u - x1)
                exps.append((u, -((-v) // dx)))
        return MonomialIdeal(exps)

    def is_integrally_closed(self) -> bool:
        return self.integral_closure() == self


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hilbert_burch(a: MonomialIdeal, field) -> list[list[Polynomial]]:
    """Syzygy matrix of the staircase, (n+1) x n for n+1 generators.

    Column j relates consecutive generators j-1 and j: the x-gap above, the
    negated y-gap on the diagonal.  Its maximal minors recover the
    generators up to sign.
    """
    gens = a.gens
    n = len(gens) - 1
    if n == 0:
        raise ValueError("principal ideal has no Hilbert-Burch matrix")
    zero = Polynomial.zero(field, 2)
    rows = [[zero] * n for _ in range(n + 1)]
    for j in range(1, n + 1):
        xgap = gens[j][0] - gens[j - 1][0]
        ygap = gens[j - 1][1] - gens[j][1]
        rows[j - 1][j - 1] = Polynomial.from_monomial((xgap, 0), field)
        rows[j][j - 1] = -Polynomial.from_monomial((0, ygap), field)
    return rows


def hb_fitting(a: MonomialIdeal, i: int) -> MonomialIdeal | None:
    """i-th Fitting ideal of R/a computed from the staircase syzygies.

    The bidiagonal shape keeps this combinatorial: a k x k minor is nonzero
    only when its columns split into consecutive runs and each run picks a
    prefix of x-gaps followed by a suffix of y-gaps, and then the gap
    products telescope.  Size-zero minors give the unit ideal; an empty
    minor list (size above n) gives None for the zero ideal.
    """
    gens = a.gens
    n = len(gens) - 1
    k = n + 1 - i
    if k <= 0:
        return MonomialIdeal([(0, 0)])
    if k > n:
        return None
    out: list[tuple[int, int]] = []
    for cols in _subsets(n, k):
        runs = _runs(cols)
        per_run = []
        for c, m in runs:
            opts = []
            for p in range(m + 2):
                mid = gens[c + p - 1]
                opts.append((mid[0] - gens[c - 1][0], mid[1] - gens[c + m][1]))
            per_run.append(opts)
        for pick in iproduct(*per_run):
            ex = sum(e[0] for e in pick)
            ey = sum(e[1] for e in pick)
            out.append((ex, ey))
    return MonomialIdeal(out)


def _subsets(n, k):
    from itertools import combinations

    return combinations(range(1, n + 1), k)


def _runs(cols):
    """Maximal runs of consecutive columns as (start, length-1) pairs."""
    runs = []
    start = cols[0]
    prev = cols[0]
    for c in cols[1:]:
        if c == prev + 1:
            prev = c
        else:
            runs.append((start, prev - start))
            start = prev = c
    runs.append((start, prev - start))
    return runs


@dataclass
class FittingColengthReport:
    """Alternating multiplicity sum over Fitting ideals of R/a."""

    ideal: MonomialIdeal
    terms: list[int]
    value: int
    colength: int


def colength_by_fittings(a: MonomialIdeal) -> FittingColengthReport:
    """Colength of an integrally closed ideal as an alternating sum.

    Sums (-1)^(i+1) e(Fitt_i) over i >= 1 until the Fitting chain reaches
    the unit ideal, and checks the total against the staircase count.
    """
    if not a.is_m_primary():
        raise NotMPrimary(f"infinite colength: {a!r}")
    if not a.is_integrally_closed():
        raise NotIntegrallyClosed(
            f"closure is {a.integral_closure()!r}, strictly larger"
        )
    if a.is_unit():
        return FittingColengthReport(ideal=a, terms=[], value=0, colength=0)
    terms = []
    i = 1
    while True:
        f = hb_fitting(a, i)
        if f.is_unit():
            break
        terms.append(f.newton_multiplicity())
        i += 1
    value = sum(t if i % 2 == 0 else -t for i, t in enumerate(terms))
    colen = a.colength()
    if value != colen:
        raise VerificationError(
            "alternating Fitting sum missed the colength",
            expected=colen,
            actual=value,
        )
    return FittingColengthReport(ideal=a, terms=terms, value=value, colength=colen)


def staircase_points(a: MonomialIdeal) -> list[tuple[int, int]]:
    """Exponents outside the ideal, ordered by degree then x-power.

    Finite only for m-primary ideals.
    """
    if not a.is_m_primary():
        raise NotMPrimary(f"infinite staircase: {a!r}")
    pts = []
    bound = a.gens[0][1]
    width = a.gens[-1][0]
    for u in range(width):
        for v in range(bound):
            if not a.contains_exponent((u, v)):
                pts.append((u, v))
    pts.sort(key=lambda p: (p[0] + p[1], p[0]))
    return pts
