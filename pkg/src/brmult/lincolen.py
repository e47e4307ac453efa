"""Dense linear algebra lengths over a prime field.

The truncated quotient R/(a + m^C) is a finite dimensional vector space
spanned by monomials of degree below C, and the image of a in it is
spanned by the truncated monomial multiples of the generators.  Row
reducing that span mod p gives the same degree histogram as a truncated
Groebner basis, just much faster on dense inputs: numpy does the row
operations and int64 holds products of residues below 2^31.

Only the two variable ring appears here, and only prime fields: the
rational path stays with the Groebner engine, where coefficient growth is
managed symbolically.
"""

from __future__ import annotations

import numpy as np

from .errors import NonFiniteColength

MAX_LINEAR_CUTOFF = 96

_INT64_PRIME_BOUND = 1 << 31


def _check_prime(p):
    if p >= _INT64_PRIME_BOUND:
        raise ValueError(f"prime {p} too large for the int64 kernel")


def _tri(d):
    return d * (d + 1) // 2


def _col_index(deg, ypow):
    # Columns enumerate monomials by degree, then by y power inside a
    # degree, matching grevlex within each level.
    return _tri(deg) + ypow


_PANEL = 64


def _mul_mod(factors, piv_trail, p):
    """factors @ piv_trail mod p, exactly, via float64 matmuls.

    Entries sit below p < 2^31 and the inner dimension is at most 64, so
    splitting factors into 16 bit halves keeps both products inside the
    2^53 integer range of float64.
    """
    lo = (factors & 0xFFFF).astype(np.float64)
    hi = (factors >> 16).astype(np.float64)
    t = piv_trail.astype(np.float64)
    d_hi = (hi @ t).astype(np.int64) % p
    d_lo = (lo @ t).astype(np.int64)
    return ((d_hi << 16) + d_lo) % p


def matmul_mod(a, b, p):
    """a @ b mod p for residue matrices with any inner dimension."""
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for c0 in range(0, a.shape[1], _PANEL):
        c1 = min(c0 + _PANEL, a.shape[1])
        out = (out + _mul_mod(a[:, c0:c1], b[c0:c1], p)) % p
    return out


def _echelon(rows, p):
    """In place blocked row reduction mod p; returns the pivot columns.

    Afterwards the first len(pivots) rows are an echelon basis of the row
    space: each is scaled to a unit pivot and reduced against the earlier
    pivot columns, and all remaining rows are zero.
    """
    nrows, ncols = rows.shape
    all_pivots = []
    r = 0
    c0 = 0
    while c0 < ncols and r < nrows:
        c1 = min(c0 + _PANEL, ncols)
        factors = np.zeros((nrows, c1 - c0), dtype=np.int64)
        npiv = 0
        for c in range(c0, c1):
            rp = r + npiv
            if rp == nrows:
                break
            nz = np.flatnonzero(rows[rp:, c])
            if nz.size == 0:
                continue
            i = rp + int(nz[0])
            if npiv and np.any(factors[i]):
                # Row touched by earlier panel pivots: its trailing part is
                # stale, bring it current before promoting it.
                d = _mul_mod(factors[i : i + 1, :npiv], rows[r:rp, c1:], p)
                rows[i, c1:] = (rows[i, c1:] - d[0]) % p
                factors[i, :npiv] = 0
            if i != rp:
                rows[[rp, i]] = rows[[i, rp]]
                factors[[rp, i]] = factors[[i, rp]]
            inv = pow(int(rows[rp, c]), p - 2, p)
            rows[rp, c:] = (rows[rp, c:] * inv) % p
            below = np.flatnonzero(rows[rp + 1 :, c]) + rp + 1
            if below.size:
                f = rows[below, c]
                factors[below, npiv] = f
                rows[below, c:c1] = (
                    rows[below, c:c1] - f[:, None] * rows[rp : rp + 1, c:c1]
                ) % p
            all_pivots.append(c)
            npiv += 1
        if npiv and c1 < ncols and r + npiv < nrows:
            live = np.flatnonzero(np.any(factors[r + npiv :, :npiv], axis=1))
            if live.size:
                idx = live + r + npiv
                d = _mul_mod(factors[idx, :npiv], rows[r : r + npiv, c1:], p)
                rows[idx, c1:] = (rows[idx, c1:] - d) % p
        r += npiv
        c0 = c1
    return all_pivots


def _echelon_hist(rows, col_degrees, p):
    """In place blocked row reduction mod p; returns pivots per degree."""
    ncols = rows.shape[1]
    hist = np.zeros(int(col_degrees[-1]) + 1 if ncols else 1, dtype=np.int64)
    for c in _echelon(rows, p):
        hist[col_degrees[c]] += 1
    return hist


def _ring_rows(polys, cutoff, p):
    """Truncated monomial multiples of the generators as matrix rows."""
    ncols = _tri(cutoff)
    chunks = []
    tri = np.array([_tri(d) for d in range(2 * cutoff + 2)], dtype=np.int64)
    for g in polys:
        degs = np.array([e[0] + e[1] for e, _ in g.terms], dtype=np.int64)
        ypow = np.array([e[1] for e, _ in g.terms], dtype=np.int64)
        vals = np.array([c % p for _, c in g.terms], dtype=np.int64)
        low = int(degs.min())
        for s in range(cutoff - low):
            keep = degs + s < cutoff
            if not keep.any():
                continue
            kd, ky, kv = degs[keep], ypow[keep], vals[keep]
            block = np.zeros((s + 1, ncols), dtype=np.int64)
            for b in range(s + 1):
                cols = tri[kd + s] + ky + b
                block[b, cols] = kv
            chunks.append(block)
    if not chunks:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.concatenate(chunks, axis=0)


def colength_histogram(polys, cutoff, p):
    """Degree histogram of standard monomials of (ideal + m^cutoff) mod p.

    Same contract as the Groebner-side truncated counts: entry d counts
    the monomials of degree d outside the ideal, for d below the cutoff.
    """
    _check_prime(p)
    ncols = _tri(cutoff)
    col_degrees = np.empty(ncols, dtype=np.int64)
    for d in range(cutoff):
        col_degrees[_tri(d) : _tri(d + 1)] = d
    rows = _ring_rows(polys, cutoff, p)
    pivots = _echelon_hist(rows, col_degrees, p)
    counts = []
    for d in range(cutoff):
        counts.append(d + 1 - int(pivots[d]) if d < len(pivots) else d + 1)
    return counts


def _col_degree_array(cutoff):
    col_degrees = np.empty(_tri(cutoff), dtype=np.int64)
    for d in range(cutoff):
        col_degrees[_tri(d) : _tri(d + 1)] = d
    return col_degrees


def _col_exponents(c):
    """Inverse of _col_index: the (x, y) exponent pair of a column."""
    d = int((np.sqrt(8 * c + 1) - 1) // 2)
    while _tri(d + 1) <= c:
        d += 1
    while _tri(d) > c:
        d -= 1
    ypow = c - _tri(d)
    return d - ypow, ypow


class QuotientSpan:
    """Echelonized truncation of an ideal at a certified cutoff.

    The pivot staircase of the degree-major column order is closed under
    monomial multiplication, so one pivot-full degree level proves that
    the whole power m^cutoff lies inside the ideal (Nakayama).  From then
    on the span decides exact membership: a polynomial belongs to the
    ideal iff its truncated coefficient vector reduces to zero.
    """

    __slots__ = ("p", "cutoff", "rows", "piv_cols", "colength", "_rref_done")

    def __init__(self, p, cutoff, rows, piv_cols):
        self.p = p
        self.cutoff = cutoff
        self.rows = rows
        self.piv_cols = piv_cols
        self.colength = _tri(cutoff) - len(piv_cols)
        self._rref_done = False

    def _ensure_rref(self):
        if self._rref_done:
            return
        rows, p = self.rows, self.p
        for k, c in enumerate(self.piv_cols):
            if k == 0:
                continue
            f = rows[:k, c]
            nz = np.flatnonzero(f)
            if nz.size:
                rows[nz, c:] = (rows[nz, c:] - f[nz, None] * rows[k, c:]) % p
        self._rref_done = True

    def standard_cols(self):
        mask = np.ones(_tri(self.cutoff), dtype=bool)
        mask[self.piv_cols] = False
        return np.flatnonzero(mask)

    def reduce(self, vectors):
        """Normal forms of row vectors against the span."""
        if not self.piv_cols:
            return vectors % self.p
        self._ensure_rref()
        npiv = len(self.piv_cols)
        coef = vectors[:, np.array(self.piv_cols, dtype=np.int64)]
        return (vectors - matmul_mod(coef, self.rows[:npiv], self.p)) % self.p

    def vector_of(self, terms):
        """Truncated coefficient vector of a term list (high terms drop)."""
        v = np.zeros(_tri(self.cutoff), dtype=np.int64)
        for (xe, ye), coeff in terms:
            if xe + ye < self.cutoff:
                v[_col_index(xe + ye, ye)] = (
                    v[_col_index(xe + ye, ye)] + int(coeff)
                ) % self.p
        return v

    def contains(self, poly):
        """Exact ideal membership; truncation is harmless past the cutoff."""
        nf = self.reduce(self.vector_of(poly.terms)[None, :])
        return not nf.any()


def quotient_span(polys, p, label="ideal", limit=None):
    """Certified QuotientSpan of an ideal, or NonFiniteColength.

    Tries growing cutoffs; accepts once some degree level is pivot-full,
    which certifies both the colength and the membership test.  Ideals
    whose staircase is taller than the limit (MAX_LINEAR_CUTOFF unless a
    caller screening candidates lowers it) are rejected rather than
    guessed at.
    """
    _check_prime(p)
    top = MAX_LINEAR_CUTOFF if limit is None else min(limit, MAX_LINEAR_CUTOFF)
    cutoff = 16
    while True:
        cutoff = min(cutoff, top)
        col_degrees = _col_degree_array(cutoff)
        rows = _ring_rows(polys, cutoff, p)
        piv_cols = _echelon(rows, p)
        hist = np.zeros(cutoff, dtype=np.int64)
        for c in piv_cols:
            hist[col_degrees[c]] += 1
        full = np.arange(1, cutoff + 1, dtype=np.int64)
        if np.any(hist == full):
            return QuotientSpan(p, cutoff, rows, piv_cols)
        if cutoff == top:
            raise NonFiniteColength(
                f"{label}: no full degree level below cutoff "
                f"{top}; colength unbounded or too deep"
            )
        cutoff *= 2


def _shift_rows(terms, cutoff, p):
    """Truncated monomial multiples of one term list (see _ring_rows)."""
    ncols = _tri(cutoff)
    degs = np.array([e[0] + e[1] for e, _ in terms], dtype=np.int64)
    ypow = np.array([e[1] for e, _ in terms], dtype=np.int64)
    vals = np.array([int(c) % p for _, c in terms], dtype=np.int64)
    tri = np.array([_tri(d) for d in range(2 * cutoff + 2)], dtype=np.int64)
    low = int(degs.min())
    blocks = []
    for s in range(max(0, cutoff - low)):
        keep = degs + s < cutoff
        if not keep.any():
            continue
        kd, ky, kv = degs[keep], ypow[keep], vals[keep]
        block = np.zeros((s + 1, ncols), dtype=np.int64)
        for b in range(s + 1):
            block[b, tri[kd + s] + ky + b] = kv
        blocks.append(block)
    if not blocks:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.concatenate(blocks, axis=0)


def colon_terms(span, a_polys):
    """Generators to adjoin for (b : a), given the span of b.

    For g supported on the standard monomials of R/b, membership of g*a_k
    in b is a linear condition, so the whole colon is b plus the kernel of
    the stacked multiplication maps on the truncated quotient.  Returns
    (new generator term lists, span of the colon ideal); the lists are
    pruned to a minimal set by increasing order.
    """
    p = span.p
    cutoff = span.cutoff
    if span.colength == 0:
        return [[((0, 0), 1)]], span
    std = span.standard_cols()
    s_count = std.size
    std_x = np.empty(s_count, dtype=np.int64)
    std_y = np.empty(s_count, dtype=np.int64)
    for i, c in enumerate(std):
        std_x[i], std_y[i] = _col_exponents(int(c))
    blocks = []
    for g in a_polys:
        v = np.zeros((s_count, _tri(cutoff)), dtype=np.int64)
        for (xe, ye), coeff in g.terms:
            tx = std_x + xe
            ty = std_y + ye
            keep = np.flatnonzero(tx + ty < cutoff)
            cols = _tri(tx[keep] + ty[keep]) + ty[keep]
            np.add.at(v, (keep, cols), int(coeff) % p)
        v %= p
        blocks.append(span.reduce(v)[:, std])
    stacked = np.concatenate(blocks, axis=1)
    # Left kernel of `stacked`: row combinations of the standard monomials
    # annihilating every generator of a modulo b.
    work = stacked.T.copy()
    piv = _echelon(work, p)
    for k, c in enumerate(piv):
        if k:
            f = work[:k, c]
            nz = np.flatnonzero(f)
            if nz.size:
                work[nz, c:] = (work[nz, c:] - f[nz, None] * work[k, c:]) % p
    piv_set = set(piv)
    candidates = []
    for fc in range(s_count):
        if fc in piv_set:
            continue
        x = np.zeros(s_count, dtype=np.int64)
        x[fc] = 1
        for k, pc in enumerate(piv):
            x[pc] = (-work[k, fc]) % p
        support = np.flatnonzero(x)
        order = int(min(std_x[i] + std_y[i] for i in support))
        candidates.append((order, fc, x))
    candidates.sort(key=lambda t: (t[0], t[1]))
    kept = []
    current_rows = span.rows[: len(span.piv_cols)]
    current_piv = list(span.piv_cols)
    for _, _, x in candidates:
        vec = np.zeros(_tri(cutoff), dtype=np.int64)
        vec[std[np.flatnonzero(x)]] = x[np.flatnonzero(x)]
        red = vec.copy()
        for k, c in enumerate(current_piv):
            f = int(red[c])
            if f:
                red[c:] = (red[c:] - f * current_rows[k, c:]) % p
        if not red.any():
            continue
        terms = [
            ((int(std_x[i]), int(std_y[i])), int(x[i]))
            for i in np.flatnonzero(x)
        ]
        kept.append(terms)
        grown = np.concatenate(
            [current_rows, _shift_rows(terms, cutoff, p)], axis=0
        )
        current_piv = _echelon(grown, p)
        current_rows = grown[: len(current_piv)]
    return kept, QuotientSpan(p, cutoff, current_rows, current_piv)


def module_colength_histogram(columns, rank, cutoff, p):
    """Degree histogram for F/(N + m^cutoff F), F free of the given rank.

    Columns are the generating vectors of the submodule N, each a sequence
    of rank polynomials.
    """
    _check_prime(p)
    per_deg = [rank * (d + 1) for d in range(cutoff)]
    starts = [0]
    for d in range(cutoff):
        starts.append(starts[-1] + per_deg[d])
    ncols = starts[-1]
    col_degrees = np.empty(ncols, dtype=np.int64)
    for d in range(cutoff):
        col_degrees[starts[d] : starts[d + 1]] = d

    def col_of(comp, deg, ypow):
        return starts[deg] + comp * (deg + 1) + ypow

    chunks = []
    for vec in columns:
        entries = []
        for comp, g in enumerate(vec):
            for e, c in g.terms:
                entries.append((comp, e[0] + e[1], e[1], c % p))
        if not entries:
            continue
        comp_a = np.array([t[0] for t in entries], dtype=np.int64)
        degs = np.array([t[1] for t in entries], dtype=np.int64)
        ypow = np.array([t[2] for t in entries], dtype=np.int64)
        vals = np.array([t[3] for t in entries], dtype=np.int64)
        low = int(degs.min())
        start_arr = np.array(starts[:-1] + [starts[-1]], dtype=np.int64)
        for s in range(cutoff - low):
            keep = degs + s < cutoff
            if not keep.any():
                continue
            kc, kd, ky, kv = comp_a[keep], degs[keep], ypow[keep], vals[keep]
            block = np.zeros((s + 1, ncols), dtype=np.int64)
            for b in range(s + 1):
                cols = start_arr[kd + s] + kc * (kd + s + 1) + ky + b
                block[b, cols] = kv
            chunks.append(block)
    if chunks:
        rows = np.concatenate(chunks, axis=0)
    else:
        rows = np.zeros((0, ncols), dtype=np.int64)
    pivots = _echelon_hist(rows, col_degrees, p)
    counts = []
    for d in range(cutoff):
        full = rank * (d + 1)
        counts.append(full - int(pivots[d]) if d < len(pivots) else full)
    return counts
