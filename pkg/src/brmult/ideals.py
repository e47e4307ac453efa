"""Ideals of k[x,y] localized at the origin.

Arithmetic is plain polynomial algebra; membership, equality, and colength
go through Groebner bases.  Colength is the local one: components of the
zero set away from the origin never contribute, because every count is
taken against the ideal truncated by a power of the maximal ideal, and the
truncation level doubles until two empty degree levels certify that the
count has stabilized.
"""

from __future__ import annotations

from .errors import FieldMismatch, NonFiniteColength, SizeCapExceeded
from .fields import QQ
from .groebner import INFINITE, groebner, truncated_degree_counts
from .monomial import MonomialIdeal
from .orders import Elimination, GREVLEX
from .poly import Polynomial, parse_many

POWER_CAP = 64
CUTOFF_START = 16
CUTOFF_CAP = 512


class Ideal:
    """Finitely generated ideal, generators kept as given."""

    __slots__ = ("field", "gens", "_gb", "_span", "_mu")

    def __init__(self, gens, field=None):
        gens = [g for g in gens if not g.is_zero()]
        if field is None:
            if not gens:
                raise ValueError("zero ideal needs an explicit field")
            field = gens[0].field
        for g in gens:
            if g.field != field:
                raise FieldMismatch(f"{g.field} vs {field}")
        self.field = field
        self.gens = tuple(
            g if g.arity == 2 else g.restrict_arity(2) for g in gens
        )
        self._gb = None
        self._span = None
        self._mu = None

    @classmethod
    def parse(cls, text: str, field=QQ) -> "Ideal":
        return cls(parse_many(text, field, arity=2), field)

    @classmethod
    def from_monomial(cls, a: MonomialIdeal, field=QQ) -> "Ideal":
        return cls(a.to_polys(field), field)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"

    def groebner(self):
        if self._gb is None:
            self._gb = groebner(self.gens, GREVLEX, self.field, arity=2)
        return self._gb

    def _quotient_span(self, limit=None):
        """Cached linear model of R/a, prime fields and finite colength only.

        A limit below the standard cap makes this a shallow screen: a
        miss then means "unknown at this depth" and is not cached, so a
        later full query still runs.
        """
        if not self.gens:
            return None
        if self._span is None:
            from .lincolen import MAX_LINEAR_CUTOFF, quotient_span

            try:
                self._span = quotient_span(
                    self.gens, self.field.characteristic, limit=limit
                )
            except NonFiniteColength:
                if limit is None or limit >= MAX_LINEAR_CUTOFF:
                    self._span = False
                return None
        return self._span or None

    def monomial_form(self) -> MonomialIdeal | None:
        """Staircase view when the given generators are all monomials."""
        if not self.gens:
            return None
        if all(g.is_monomial() for g in self.gens):
            return MonomialIdeal.from_polys(self.gens)
        return None

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.groebner().is_unit_ideal()

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if not self.gens:
            return False
        if self.field.characteristic and self._gb is None:
            span = self._quotient_span()
            if span is not None:
                return span.contains(f)
        return self.groebner().contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.field.characteristic:
            sa, sb = self._quotient_span(), other._quotient_span()
            if sa is not None and sb is not None:
                return sa.colength == sb.colength and all(
                    sa.contains(g) for g in other.gens
                )
        return self.groebner() == other.groebner()

    def add(self, other: "Ideal") -> "Ideal":
        return Ideal(self.gens + other.gens, self.field)

    def mul(self, other: "Ideal") -> "Ideal":
        return Ideal(
            [f * g for f in self.gens for g in other.gens], self.field
        )

    def power(self, n: int) -> "Ideal":
        if n < 0:
            raise ValueError("negative ideal power")
        if n > POWER_CAP:
            raise SizeCapExceeded(f"ideal power {n} above cap {POWER_CAP}")
        if n == 0:
            return Ideal([Polynomial.constant(1, self.field, 2)], self.field)
        mono = self.monomial_form()
        if mono is not None:
            return Ideal.from_monomial(mono.power(n), self.field)
        out = self
        for _ in range(n - 1):
            out = out.mul(self)
        return out

    def intersect(self, other: "Ideal") -> "Ideal":
        """Eliminate t from t*a + (1-t)*b."""
        if self.is_zero() or other.is_zero():
            return Ideal([], self.field)
        ma, mb = self.monomial_form(), other.monomial_form()
        if ma is not None and mb is not None:
            return Ideal.from_monomial(ma.intersect(mb), self.field)
        t = Polynomial.variable(2, self.field, 3)
        one = Polynomial.constant(1, self.field, 3)
        seeds = [t * g.extend_arity(3) for g in self.gens]
        seeds += [(one - t) * g.extend_arity(3) for g in other.gens]
        gb = groebner(seeds, Elimination(1), self.field, arity=3)
        kept = [
            e.restrict_arity(2)
            for e in gb.elements
            if all(ex[2] == 0 for ex, _ in e.terms)
        ]
        return Ideal(kept, self.field)

    def colon(self, other: "Ideal | Polynomial") -> "Ideal":
        """Ideal quotient a : b via intersection and exact division."""
        if isinstance(other, Polynomial):
            other = Ideal([other], self.field)
        if other.is_zero():
            return Ideal([Polynomial.constant(1, self.field, 2)], self.field)
        ma, mb = self.monomial_form(), other.monomial_form()
        if ma is not None and mb is not None:
            return Ideal.from_monomial(ma.colon(mb), self.field)
        if self.field.characteristic:
            span = self._quotient_span()
            if span is not None:
                from .lincolen import colon_terms

                new_terms, out_span = colon_terms(span, other.gens)
                gens = list(self.gens) + [
                    Polynomial(self.field, 2, t) for t in new_terms
                ]
                out = Ideal(gens, self.field)
                out._span = out_span
                return out
        out = None
        for f in other.gens:
            meet = self.intersect(Ideal([f], self.field))
            piece = Ideal(
                [exact_quotient(g, f) for g in meet.gens], self.field
            )
            out = piece if out is None else out.intersect(piece)
        return out

    def colength(self, method: str | None = None) -> int:
        """Length of the localized quotient; raises when it never stabilizes.

        method picks the histogram backend: "linear" for the numpy row
        reduction (prime fields only), "groebner" for the truncated basis,
        None for linear over a prime field (whose cap is then final) and
        the basis histogram over the rationals.
        """
        mono = self.monomial_form()
        if mono is not None and method is None:
            n = mono.colength()
            if n is INFINITE:
                raise NonFiniteColength(f"not m-primary: {self!r}")
            return n
        if not self.gens:
            raise NonFiniteColength("zero ideal")
        if method is None and self.field.characteristic:
            span = self._quotient_span()
            if span is not None:
                return span.colength
            raise NonFiniteColength(
                "no certificate up to the linear truncation cap; "
                'pass method="groebner" to push deeper'
            )
        return stabilized_colength(
            self.gens, self.field.characteristic, method
        )

    def is_m_primary(self) -> bool:
        """Whether the quotient has finite length, up to the truncation cap.

        Over a prime field the linear model decides this directly; an
        ideal whose quotient is finite but deeper than the cap is
        reported non-primary rather than escalating through the slower
        basis routes, the same cap every colength route already lives
        under.
        """
        mono = self.monomial_form()
        if mono is not None:
            return mono.is_m_primary()
        if self.field.characteristic and self._gb is None:
            return self._quotient_span() is not None
        try:
            self.colength()
        except NonFiniteColength:
            return False
        return True

    def mingens_count(self) -> int:
        """Minimal number of generators, finite-colength ideals only."""
        if self._mu is None:
            m = maximal_ideal(self.field)
            self._mu = m.mul(self).colength() - self.colength()
        return self._mu


def screened_primary(ideal: Ideal, limit: int = 32) -> bool:
    """m-primality with a shallow certificate over prime fields.

    Meant for streams of random candidates where most draws are rejects
    and a reject must not cost a full-depth scan.  Primary ideals deeper
    than the limit are reported False; callers for whom that matters use
    is_m_primary instead.
    """
    mono = ideal.monomial_form()
    if mono is not None:
        return mono.is_m_primary()
    if ideal.field.characteristic:
        return ideal._quotient_span(limit=limit) is not None
    return ideal.is_m_primary()


def stabilized_colength(
    seeds, p, method=None, linear_histogram=None, gb_histogram=None
):
    """Shared truncation loop behind ideal and module colengths.

    Two stabilization certificates are in play, one per backend.  The
    linear kernel orders basis monomials by ascending degree, so pivots are
    order-minimal leading terms; a single empty degree level then pulls the
    whole power m^K into the truncated ideal by downward induction, and
    Nakayama finishes.  The Groebner histogram leads with grevlex-maximal
    terms, where that induction fails, so it certifies by agreement of two
    successive truncations instead: equal lengths force the nested
    truncated ideals to coincide, and Nakayama again removes the tail.
    """
    if method not in (None, "linear", "groebner"):
        raise ValueError(f"unknown colength method {method!r}")
    if method == "linear" and p == 0:
        raise ValueError("linear colength needs a prime field")
    from .lincolen import MAX_LINEAR_CUTOFF, colength_histogram

    if linear_histogram is None:
        linear_histogram = colength_histogram
    if gb_histogram is None:
        gb_histogram = truncated_degree_counts
    prev = None
    cutoff = CUTOFF_START
    while cutoff <= CUTOFF_CAP:
        if cutoff > MAX_LINEAR_CUTOFF and (
            method == "linear" or (method is None and p > 0)
        ):
            raise NonFiniteColength(
                f"no stabilization up to truncation degree {cutoff // 2}"
                " (linear backend cap)"
            )
        linear = method == "linear" or (
            method is None and p > 0 and cutoff <= MAX_LINEAR_CUTOFF
        )
        if linear:
            counts = linear_histogram(seeds, cutoff, p)
            top = max((d for d, c in enumerate(counts) if c), default=-1)
            if top <= cutoff - 2:
                return sum(counts)
            prev = None
        else:
            counts = gb_histogram(seeds, cutoff)
            total = sum(counts)
            if total == prev:
                return total
            prev = total
        cutoff *= 2
    raise NonFiniteColength(
        f"no stabilization up to truncation degree {CUTOFF_CAP}"
    )


def maximal_ideal(field=QQ) -> Ideal:
    return Ideal(
        [Polynomial.variable(0, field, 2), Polynomial.variable(1, field, 2)],
        field,
    )


def exact_quotient(p: Polynomial, f: Polynomial, order=GREVLEX) -> Polynomial:
    """Quotient p/f when the division is exact; raises otherwise."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    field = p.field
    q = Polynomial.zero(field, p.arity)
    rem = p
    ef, cf = f.leading_term(order)
    while not rem.is_zero():
        er, cr = rem.leading_term(order)
        shift = tuple(a - b for a, b in zip(er, ef))
        if any(s < 0 for s in shift):
            raise ArithmeticError(f"{f} does not divide {p} exactly")
        c = field.div(cr, cf)
        q = q + Polynomial.from_monomial(shift, field, c)
        rem = rem - f.mul_monomial(shift, c)
    return q
