"""Buchberger engine for ideals and for submodules of a free module.

Design notes.

Engine terms are (key, coefficient) pairs where key is the monomial's sort
key under the active order; keys are linear in the exponents, so a monomial
multiple shifts every key by a constant tuple.  Terms live in lists sorted
descending, reductions are sorted merges.

Over the rationals the engine works with primitive integer coefficient
vectors and pseudo-reduction (scale by leading coefficients divided by
their gcd), extracting integer content after each completed reduction.
Leading term data is unaffected by the scaling, and every quantity we
extract from a basis (leading exponents, zero-ness of normal forms, ideal
membership) is scale invariant.  Reduced bases are made monic only at the
public boundary.  Over a prime field basis elements are kept monic.

A cutoff argument computes with the ideal enlarged by all monomials of
total degree equal to the cutoff, which is the truncation used for local
lengths: terms of degree at or above the cutoff are dropped during merges
(reduction by those monomial generators), and the boundary monomials
participate in S-pairs so that multiples of a generator that fold back
under the cutoff are found.  Pair selection is the normal strategy, minimal
lcm degree first; the product and chain criteria prune the queue.
"""

from __future__ import annotations

from math import gcd

from .errors import FieldMismatch, SizeCapExceeded
from .fields import QQ
from .orders import GREVLEX
from .poly import Monomial, Polynomial


class _Infinite:
    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


# -- order adaptors ---------------------------------------------------------


class _RingOps:
    """Key algebra for scalar polynomials under a ring order."""

    def __init__(self, order):
        self.order = order
        self.key = order.key
        self.deg = order.deg_of_key
        self.divides = order.key_divides
        self.exps = order.exps_of_key

    def prep(self, poly, cutoff=None):
        key = self.key
        terms = [(key(e), c) for e, c in poly.terms]
        if cutoff is not None:
            deg = self.deg
            terms = [t for t in terms if deg(t[0]) < cutoff]
        terms.sort(reverse=True)
        return terms

    def pairable(self, ka, kb):
        return True

    def lcm_key(self, ka, kb):
        ea, eb = self.exps(ka), self.exps(kb)
        return self.key(tuple(max(a, b) for a, b in zip(ea, eb)))

    def coprime(self, ka, kb):
        ea, eb = self.exps(ka), self.exps(kb)
        return all(min(a, b) == 0 for a, b in zip(ea, eb))


class _ModuleOps:
    """Key algebra for free module elements under position over term.

    Earlier components are greater.  A module key is (-component,) + ring
    key, compared as a tuple, so the engine code is identical to the scalar
    case; divisibility additionally requires matching components.
    """

    def __init__(self, order):
        self.order = order
        self._rkey = order.key
        self._rdeg = order.deg_of_key
        self._rdiv = order.key_divides
        self._rexps = order.exps_of_key

    def key(self, comp, exps):
        return (-comp,) + self._rkey(exps)

    def deg(self, k):
        return self._rdeg(k[1:])

    def divides(self, ka, kb):
        return ka[0] == kb[0] and self._rdiv(ka[1:], kb[1:])

    def exps(self, k):
        return self._rexps(k[1:])

    def comp(self, k):
        return -k[0]

    def prep(self, vector, cutoff=None):
        terms = []
        for comp, poly in enumerate(vector):
            for e, c in poly.terms:
                k = (-comp,) + self._rkey(e)
                if cutoff is not None and self._rdeg(k[1:]) >= cutoff:
                    continue
                terms.append((k, c))
        terms.sort(reverse=True)
        return terms

    def pairable(self, ka, kb):
        return ka[0] == kb[0]

    def lcm_key(self, ka, kb):
        ea, eb = self._rexps(ka[1:]), self._rexps(kb[1:])
        return (ka[0],) + self._rkey(tuple(max(a, b) for a, b in zip(ea, eb)))

    def coprime(self, ka, kb):
        # The product criterion is unsound for modules: tails can live in
        # other components.  Never prune on it.
        return False


# -- coefficient normalization ---------------------------------------------


def _primitive(terms):
    """Divide out integer content; normalize the leading sign positive."""
    if not terms:
        return terms
    g = 0
    for _, c in terms:
        g = gcd(g, c)
        if g == 1:
            break
    if terms[0][1] < 0:
        g = -g
    if g == 1:
        return terms
    return [(k, c // g) for k, c in terms]


def _monic_mod(terms, p):
    if not terms:
        return terms
    lc = terms[0][1]
    if lc == 1:
        return terms
    inv = pow(lc, -1, p)
    return [(k, c * inv % p) for k, c in terms]


# -- merges -----------------------------------------------------------------


def _shifted(terms, delta, deg, cutoff):
    """Multiply a term list by the monomial with key shift delta."""
    out = []
    for k, c in terms:
        nk = tuple(a + b for a, b in zip(k, delta))
        if cutoff is not None and deg(nk) >= cutoff:
            continue
        out.append((nk, c))
    return out


def _comb_int(t1, a, t2, b):
    """a*t1 + b*t2 over the integers; both sorted descending, result too."""
    out = []
    i = j = 0
    n1, n2 = len(t1), len(t2)
    while i < n1 and j < n2:
        k1, k2 = t1[i][0], t2[j][0]
        if k1 > k2:
            out.append((k1, a * t1[i][1]))
            i += 1
        elif k1 < k2:
            out.append((k2, b * t2[j][1]))
            j += 1
        else:
            c = a * t1[i][1] + b * t2[j][1]
            if c:
                out.append((k1, c))
            i += 1
            j += 1
    while i < n1:
        out.append((t1[i][0], a * t1[i][1]))
        i += 1
    while j < n2:
        out.append((t2[j][0], b * t2[j][1]))
        j += 1
    return out


def _comb_mod(t1, t2, b, p):
    """t1 + b*t2 mod p; both sorted descending."""
    out = []
    i = j = 0
    n1, n2 = len(t1), len(t2)
    while i < n1 and j < n2:
        k1, k2 = t1[i][0], t2[j][0]
        if k1 > k2:
            out.append(t1[i])
            i += 1
        elif k1 < k2:
            out.append((k2, b * t2[j][1] % p))
            j += 1
        else:
            c = (t1[i][1] + b * t2[j][1]) % p
            if c:
                out.append((k1, c))
            i += 1
            j += 1
    out.extend(t1[i:])
    while j < n2:
        out.append((t2[j][0], b * t2[j][1] % p))
        j += 1
    return out


# -- reduction --------------------------------------------------------------


def _find_reducer(key, basis, live, divides):
    for idx in range(len(basis)):
        if live[idx] and divides(basis[idx][0][0], key):
            return basis[idx]
    return None


def _reduce_qq(f, basis, live, ops, cutoff):
    """Full pseudo normal form of f against the live basis, primitive."""
    deg, divides = ops.deg, ops.divides
    work = f
    i = 0
    while i < len(work):
        key, c = work[i]
        if cutoff is not None and deg(key) >= cutoff:
            work = work[:i] + work[i + 1 :]
            continue
        red = _find_reducer(key, basis, live, divides)
        if red is None:
            i += 1
            continue
        bkey, bc = red[0]
        g = gcd(c, bc)
        a, m = bc // g, c // g
        if a < 0:
            a, m = -a, -m
        delta = tuple(p - q for p, q in zip(key, bkey))
        head = work[:i] if a == 1 else [(k, cc * a) for k, cc in work[:i]]
        tail = _comb_int(
            work[i + 1 :], a, _shifted(red[1:], delta, deg, cutoff), -m
        )
        work = head + tail
    return _primitive(work)


def _reduce_fp(f, basis, live, ops, cutoff, p):
    """Normal form against a monic live basis mod p."""
    deg, divides = ops.deg, ops.divides
    work = f
    i = 0
    while i < len(work):
        key, c = work[i]
        if cutoff is not None and deg(key) >= cutoff:
            work = work[:i] + work[i + 1 :]
            continue
        red = _find_reducer(key, basis, live, divides)
        if red is None:
            i += 1
            continue
        bkey = red[0][0]
        delta = tuple(a - b for a, b in zip(key, bkey))
        work = work[:i] + _comb_mod(
            work[i + 1 :], _shifted(red[1:], delta, deg, cutoff), -c, p
        )
    return work


# -- the Buchberger loop ----------------------------------------------------

import heapq


def _raw_basis(seeds, ops, field, cutoff=None, boundary=None):
    """Run Buchberger to completion; returns the raw (non-minimal) basis.

    seeds: prepared term lists.  boundary: keys of the cutoff-degree
    monomials; they never act as reducers (the degree drop already does)
    but their S-pairs with basis elements are processed.
    """
    modular = field != QQ
    p = field.characteristic if modular else 0
    if modular:

        def reduce_(f, basis, live):
            return _reduce_fp(f, basis, live, ops, cutoff, p)

        def norm(terms):
            return _monic_mod(terms, p)

    else:

        def reduce_(f, basis, live):
            return _reduce_qq(f, basis, live, ops, cutoff)

        norm = _primitive

    basis: list[list] = []
    live: list[bool] = []
    heap: list = []
    done: set = set()
    serial = 0

    def enqueue(i, j):
        nonlocal serial
        ki, kj = basis[i][0][0], basis[j][0][0]
        if not ops.pairable(ki, kj):
            return
        kl = ops.lcm_key(ki, kj)
        heapq.heappush(heap, (ops.deg(kl), kl, serial, i, j))
        serial += 1

    def enqueue_boundary(i):
        nonlocal serial
        ki = basis[i][0][0]
        for bk in boundary or ():
            if not ops.pairable(ki, bk):
                continue
            if ops.coprime(ki, bk):
                continue
            kl = ops.lcm_key(ki, bk)
            heapq.heappush(heap, (ops.deg(kl), kl, serial, i, ("b", bk)))
            serial += 1

    def add(terms):
        terms = norm(terms)
        if not terms:
            return
        newkey = terms[0][0]
        for idx in range(len(basis)):
            if live[idx] and ops.divides(newkey, basis[idx][0][0]):
                live[idx] = False
        basis.append(terms)
        live.append(True)
        new = len(basis) - 1
        for i in range(new):
            enqueue(i, new)
        enqueue_boundary(new)

    for s in seeds:
        add(reduce_(s, basis, live))

    while heap:
        _, kl, _, i, j = heapq.heappop(heap)
        fi = basis[i]
        ki = fi[0][0]
        if isinstance(j, tuple):
            # S-pair against a boundary monomial: the monomial side vanishes
            # under the degree drop, leaving a shifted tail of the element.
            bk = j[1]
            delta = tuple(a - b for a, b in zip(kl, ki))
            s = _shifted(fi[1:], delta, ops.deg, cutoff)
            if modular:
                s = _monic_mod(s, p)
            add(reduce_(s, basis, live))
            continue
        pair = (i, j)
        if pair in done:
            continue
        done.add(pair)
        fj = basis[j]
        kj = fj[0][0]
        if ops.coprime(ki, kj):
            continue
        chained = False
        for k in range(len(basis)):
            if k == i or k == j or not ops.divides(basis[k][0][0], kl):
                continue
            a, b = (i, k) if i < k else (k, i)
            c, d = (j, k) if j < k else (k, j)
            if (a, b) in done and (c, d) in done:
                chained = True
                break
        if chained:
            continue
        di = tuple(a - b for a, b in zip(kl, ki))
        dj = tuple(a - b for a, b in zip(kl, kj))
        ti = _shifted(fi[1:], di, ops.deg, cutoff)
        tj = _shifted(fj[1:], dj, ops.deg, cutoff)
        ci, cj = fi[0][1], fj[0][1]
        if modular:
            s = _comb_mod(ti, tj, (p - 1) * ci * pow(cj, -1, p) % p, p)
            s = _monic_mod(s, p)
        else:
            g = gcd(ci, cj)
            s = _comb_int(ti, cj // g, tj, -(ci // g))
        add(reduce_(s, basis, live))

    return [b for b, alive in zip(basis, live) if alive]


def _interreduce(basis, ops, field, cutoff=None):
    """Tail-reduce a completed basis into reduced form, sorted by leading key."""
    basis = sorted(basis, key=lambda b: b[0][0])
    out = []
    modular = field != QQ
    for i, b in enumerate(basis):
        others = basis[:i] + basis[i + 1 :]
        live = [True] * len(others)
        if modular:
            nf = _reduce_fp(b, others, live, ops, cutoff, field.characteristic)
        else:
            nf = _reduce_qq(b, others, live, ops, cutoff)
        if nf:
            out.append(nf)
    return sorted(out, key=lambda b: b[0][0])


# -- public objects ---------------------------------------------------------


class GroebnerBasis:
    """A reduced Groebner basis of an ideal, unique for the ideal and order."""

    def __init__(self, field, arity, order, raw):
        self.field = field
        self.arity = arity
        self.order = order
        self._ops = _RingOps(order)
        self._raw = raw  # primitive / monic internal representation
        self._elements = None

    @property
    def elements(self) -> tuple[Polynomial, ...]:
        """Monic reduced basis elements, ascending by leading monomial."""
        if self._elements is None:
            polys = []
            for terms in self._raw:
                lc = terms[0][1]
                if self.field == QQ:
                    polys.append(
                        Polynomial(
                            self.field,
                            self.arity,
                            [(self._ops.exps(k), self.field.from_pair(c, lc)) for k, c in terms],
                        )
                    )
                else:
                    inv = pow(lc, -1, self.field.characteristic)
                    polys.append(
                        Polynomial(
                            self.field,
                            self.arity,
                            [
                                (self._ops.exps(k), c * inv % self.field.characteristic)
                                for k, c in terms
                            ],
                        )
                    )
            self._elements = tuple(polys)
        return self._elements

    def __len__(self):
        return len(self._raw)

    def __iter__(self):
        return iter(self.elements)

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [self._ops.exps(t[0][0]) for t in self._raw]

    def is_unit_ideal(self) -> bool:
        return any(all(e == 0 for e in le) for le in self.leading_exponents())

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if f.field != self.field:
            raise FieldMismatch(f"{f.field} vs {self.field}")
        terms = self._ops.prep(f)
        if self.field == QQ:
            terms = _clear_denominators(terms)
            nf = _reduce_qq(terms, self._raw, [True] * len(self._raw), self._ops, None)
        else:
            nf = _reduce_fp(
                terms, self._raw, [True] * len(self._raw), self._ops, None, self.field.characteristic
            )
        return not nf

    def normal_form(self, f: Polynomial) -> Polynomial:
        """True normal form: f minus a member of the ideal, no reducible term."""
        if f.field != self.field:
            raise FieldMismatch(f"{f.field} vs {self.field}")
        field = self.field
        ops = self._ops
        monic = [
            [(k, field.from_pair(c, t[0][1]) if field == QQ else field.div(c, t[0][1])) for k, c in t]
            for t in self._raw
        ]
        work = [(ops.key(e), c) for e, c in f.terms]
        work.sort(reverse=True)
        i = 0
        while i < len(work):
            key, c = work[i]
            red = None
            for b in monic:
                if ops.divides(b[0][0], key):
                    red = b
                    break
            if red is None:
                i += 1
                continue
            delta = tuple(a - b for a, b in zip(key, red[0][0]))
            tail = []
            j = 0
            shifted = [(tuple(a + b for a, b in zip(k, delta)), cc) for k, cc in red[1:]]
            t1 = work[i + 1 :]
            n1, n2 = len(t1), len(shifted)
            jj = ii = 0
            while ii < n1 and jj < n2:
                k1, k2 = t1[ii][0], shifted[jj][0]
                if k1 > k2:
                    tail.append(t1[ii])
                    ii += 1
                elif k1 < k2:
                    tail.append((k2, field.mul(field.neg(c), shifted[jj][1])))
                    jj += 1
                else:
                    cc = field.sub(t1[ii][1], field.mul(c, shifted[jj][1]))
                    if not field.is_zero(cc):
                        tail.append((k1, cc))
                    ii += 1
                    jj += 1
            tail.extend(t1[ii:])
            while jj < n2:
                k2 = shifted[jj][0]
                tail.append((k2, field.mul(field.neg(c), shifted[jj][1])))
                jj += 1
            work = work[:i] + tail
        return Polynomial(self.field, self.arity, [(ops.exps(k), c) for k, c in work])

    def standard_monomials(self):
        """Monomials outside the leading term ideal, or INFINITE."""
        exps = _minimal_exponents(self.leading_exponents())
        mons = _staircase_monomials(exps, self.arity)
        if mons is INFINITE:
            return INFINITE
        return [Monomial(e) for e in mons]

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.field == other.field
            and self.arity == other.arity
            and self.order.name == other.order.name
            and [tuple(t) for t in self._raw] == [tuple(t) for t in other._raw]
        )

    def __repr__(self):
        els = ", ".join(str(p) for p in self.elements)
        return f"GroebnerBasis[{els}]"


def _clear_denominators(terms):
    """Scale Fraction terms to a primitive integer vector."""
    if not terms:
        return []
    denom = 1
    for _, c in terms:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [(k, int(c * denom)) for k, c in terms]
    return _primitive(ints)


def groebner(polys, order=GREVLEX, field=None, arity=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by polys."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return GroebnerBasis(field or QQ, arity or 2, order, [])
    field = polys[0].field
    arity = polys[0].arity
    ops = _RingOps(order)
    if field == QQ:
        seeds = [_clear_denominators(ops.prep(p)) for p in polys]
    else:
        seeds = [ops.prep(p) for p in polys]
    raw = _raw_basis(seeds, ops, field, None, None)
    raw = _interreduce(raw, ops, field, None)
    return GroebnerBasis(field, arity, order, raw)


def buchberger_criterion_holds(gb: GroebnerBasis) -> bool:
    """Post-check: every S-polynomial of the basis reduces to zero."""
    ops = gb._ops
    raw = gb._raw
    live = [True] * len(raw)
    field = gb.field
    modular = field != QQ
    for i in range(len(raw)):
        for j in range(i + 1, len(raw)):
            ki, kj = raw[i][0][0], raw[j][0][0]
            kl = ops.lcm_key(ki, kj)
            di = tuple(a - b for a, b in zip(kl, ki))
            dj = tuple(a - b for a, b in zip(kl, kj))
            ti = _shifted(raw[i][1:], di, ops.deg, None)
            tj = _shifted(raw[j][1:], dj, ops.deg, None)
            ci, cj = raw[i][0][1], raw[j][0][1]
            if modular:
                p = field.characteristic
                s = _comb_mod(ti, tj, (p - 1) * ci * pow(cj, -1, p) % p, p)
                nf = _reduce_fp(s, raw, live, ops, None, p)
            else:
                g = gcd(ci, cj)
                s = _comb_int(ti, cj // g, tj, -(ci // g))
                nf = _reduce_qq(s, raw, live, ops, None)
            if nf:
                return False
    return True


# -- modules ----------------------------------------------------------------


class ModuleGroebnerBasis:
    """Groebner basis of a submodule of R^rank under position over term."""

    def __init__(self, field, arity, rank, order, raw):
        self.field = field
        self.arity = arity
        self.rank = rank
        self.order = order
        self._ops = _ModuleOps(order)
        self._raw = raw

    def __len__(self):
        return len(self._raw)

    def leading_positions(self) -> list[tuple[int, tuple[int, ...]]]:
        """(component, exponents) of each leading term."""
        ops = self._ops
        return [(ops.comp(t[0][0]), ops.exps(t[0][0])) for t in self._raw]

    def elements(self) -> list[tuple[Polynomial, ...]]:
        ops = self._ops
        out = []
        for terms in self._raw:
            comps = [[] for _ in range(self.rank)]
            for k, c in terms:
                comps[ops.comp(k)].append((ops.exps(k), c))
            out.append(
                tuple(Polynomial(self.field, self.arity, comps[i]) for i in range(self.rank))
            )
        return out

    def contains(self, vector) -> bool:
        terms = self._ops.prep(vector)
        if not terms:
            return True
        if self.field == QQ:
            terms = _clear_denominators(terms)
            nf = _reduce_qq(terms, self._raw, [True] * len(self._raw), self._ops, None)
        else:
            nf = _reduce_fp(
                terms, self._raw, [True] * len(self._raw), self._ops, None, self.field.characteristic
            )
        return not nf

    def standard_monomials(self):
        """(component, Monomial) pairs outside the leading submodule, or INFINITE."""
        out = []
        for comp in range(self.rank):
            exps = _minimal_exponents(
                [e for c, e in self.leading_positions() if c == comp]
            )
            mons = _staircase_monomials(exps, self.arity)
            if mons is INFINITE:
                return INFINITE
            out.extend((comp, Monomial(e)) for e in mons)
        return out


def module_groebner(vectors, order=GREVLEX) -> ModuleGroebnerBasis:
    """Reduced Groebner basis of the submodule generated by the vectors.

    Each vector is a sequence of Polynomials of common length (the rank).
    """
    vectors = [tuple(v) for v in vectors]
    vectors = [v for v in vectors if any(not p.is_zero() for p in v)]
    if not vectors:
        raise ValueError("no nonzero vectors")
    rank = len(vectors[0])
    field = next(p.field for p in vectors[0])
    arity = next(p.arity for p in vectors[0])
    for v in vectors:
        if len(v) != rank:
            raise ValueError("vectors of unequal rank")
    ops = _ModuleOps(order)
    if field == QQ:
        seeds = [_clear_denominators(ops.prep(v)) for v in vectors]
    else:
        seeds = [ops.prep(v) for v in vectors]
    raw = _raw_basis(seeds, ops, field, None, None)
    raw = _interreduce(raw, ops, field, None)
    return ModuleGroebnerBasis(field, arity, rank, order, raw)


# -- truncated staircases for local lengths ---------------------------------


def truncated_degree_counts(polys, cutoff, order=GREVLEX):
    """Counts by degree of standard monomials of (ideal + m^cutoff).

    Returns a list c of length cutoff with c[d] the number of monomials of
    total degree d outside the leading term ideal.  Only implemented for
    the two variable ring, which is where local lengths live.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("zero ideal has no finite colength")
    field = polys[0].field
    arity = polys[0].arity
    if arity != 2:
        raise SizeCapExceeded("truncated lengths live in the two variable ring")
    ops = _RingOps(order)
    if field == QQ:
        seeds = [_clear_denominators(ops.prep(p, cutoff)) for p in polys]
    else:
        seeds = [ops.prep(p, cutoff) for p in polys]
    seeds = [s for s in seeds if s]
    boundary = [ops.key((d, cutoff - d)) for d in range(cutoff + 1)]
    raw = _raw_basis(seeds, ops, field, cutoff, boundary)
    lead = _minimal_exponents([ops.exps(t[0][0]) for t in raw])
    return _degree_counts_2d(lead, cutoff)


def truncated_module_degree_counts(vectors, rank, cutoff, order=GREVLEX):
    """Module analogue of truncated_degree_counts, componentwise truncation."""
    vectors = [tuple(v) for v in vectors if any(not p.is_zero() for p in v)]
    if not vectors:
        raise ValueError("zero submodule has no finite colength")
    field = next(p.field for p in vectors[0])
    arity = next(p.arity for p in vectors[0])
    if arity != 2:
        raise SizeCapExceeded("truncated lengths live in the two variable ring")
    ops = _ModuleOps(order)
    if field == QQ:
        seeds = [_clear_denominators(ops.prep(v, cutoff)) for v in vectors]
    else:
        seeds = [ops.prep(v, cutoff) for v in vectors]
    seeds = [s for s in seeds if s]
    boundary = [
        ops.key(comp, (d, cutoff - d)) for comp in range(rank) for d in range(cutoff + 1)
    ]
    raw = _raw_basis(seeds, ops, field, cutoff, boundary)
    counts = [0] * cutoff
    for comp in range(rank):
        lead = _minimal_exponents(
            [ops.exps(t[0][0]) for t in raw if ops.comp(t[0][0]) == comp]
        )
        for d, c in enumerate(_degree_counts_2d(lead, cutoff)):
            counts[d] += c
    return counts


def _minimal_exponents(exps_list):
    """Minimal elements under componentwise divisibility."""
    out = []
    for e in sorted(set(map(tuple, exps_list))):
        if not any(all(a <= b for a, b in zip(m, e)) for m in out):
            out.append(e)
    return out


def _degree_counts_2d(lead, cutoff):
    """Degree histogram of the staircase complement below the cutoff."""
    counts = [0] * cutoff
    for v in range(cutoff):
        bound = None
        for a, b in lead:
            if b <= v:
                bound = a if bound is None else min(bound, a)
        if bound is None:
            bound = cutoff - v
        for u in range(min(bound, cutoff - v)):
            counts[u + v] += 1
    return counts


def _staircase_monomials(lead, arity):
    """All monomials outside the monomial ideal of lead, or INFINITE."""
    if any(all(e == 0 for e in le) for le in lead):
        return []
    bounds = []
    for i in range(arity):
        pure = [le[i] for le in lead if all(e == 0 for j, e in enumerate(le) if j != i)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    out = []

    def rec(prefix):
        if len(prefix) == arity:
            e = tuple(prefix)
            if not any(all(a <= b for a, b in zip(le, e)) for le in lead):
                out.append(e)
            return
        for v in range(bounds[len(prefix)]):
            rec(prefix + [v])

    rec([])
    out.sort(key=GREVLEX.key)
    return out
