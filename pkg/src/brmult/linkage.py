"""Linkage chains of m-primary ideals through general complete intersections.

A two-generated general reduction b of an m-primary ideal a links a to
a_1 = b : a.  Iterating drops the minimal number of generators by one per
step and stops at a complete intersection, and the multiplicities along
the chain recover the colength of the starting ideal as an alternating
sum.  For the maximal-minor ideal of a general r x (r+1) matrix the same
chain can be read off directly: trailing submatrices, shrinking by two
columns and two rows in alternation, present the successive links, and
transposing the mirrored submatrices presents them a third way as duals.
Every produced chain is certified (reduction by e-equality, links by
recomputing the colon, involution by linking back) rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ChainCapExceeded,
    GenericityFailure,
    InvolutionFailure,
    NonFiniteColength,
    VerificationError,
)
from .ideals import Ideal
from .matrices import determinant, minors
from .modules import Presentation, buchsbaum_rim, minimal_reduction_module
from .multiplicity import minimal_reduction
from .poly import Polynomial
from .sampling import GENERIC_TRIALS, GeneralSampler

CHAIN_CAP = 64
TRANSFORM_TRIALS = 5


@dataclass
class LinkChain:
    """Sequence of ideals a_0, ..., a_n with a_{i+1} = b_i : a_i.

    Each link b_i is a two-generated reduction of a_i; multiplicities
    holds e(a_i), with the terminal entry the colength of the final
    complete intersection (its own multiplicity).  For chains read off a
    matrix, the transformed presentation is kept for reuse.
    """

    ideals: list[Ideal]
    links: list[Ideal]
    multiplicities: list[int]
    mingens: list[int]
    matrix: Presentation | None = None

    def __len__(self) -> int:
        return len(self.links)

    @property
    def terminal(self) -> bool:
        return self.mingens[-1] == 2


@dataclass
class LinkBrReport:
    """Multiplicity of a module out of its matrix chain, with the check value."""

    value: int
    leading_multiplicity: int
    chain: LinkChain
    reference: int


def link_once(
    a: Ideal, sampler: GeneralSampler, label: str = "link"
) -> tuple[Ideal, Ideal]:
    """One linkage step: a general reduction b of a and b : a.

    The draw only counts when linking back recovers a (m-primary ideals
    are unmixed, so the double colon is the identity); a failed involution
    signals a non-general reduction and is redrawn.
    """
    mu = a.mingens_count()
    if mu < 3:
        raise ValueError(
            f"linking needs at least three minimal generators, got {mu}"
        )
    for trial in range(GENERIC_TRIALS):
        red = minimal_reduction(a, sampler, f"{label}:t{trial}")
        nxt = red.ideal.colon(a)
        if red.ideal.colon(nxt).equals(a):
            return red.ideal, nxt
    raise InvolutionFailure(
        f"no drawn reduction of {a!r} linked back to it "
        f"after {GENERIC_TRIALS} attempts"
    )


def link_chain(
    a: Ideal, sampler: GeneralSampler, label: str = "chain"
) -> LinkChain:
    """Link a down to a complete intersection through general reductions.

    The number of minimal generators must drop at every step; a step that
    fails to drop it is retried with fresh coefficients.  A complete
    intersection input yields the length-zero chain.
    """
    ideals = [a]
    links: list[Ideal] = []
    es: list[int] = []
    mus = [a.mingens_count()]
    while mus[-1] > 2:
        if len(links) >= CHAIN_CAP:
            raise ChainCapExceeded(
                f"linkage chain exceeded {CHAIN_CAP} steps"
            )
        cur = ideals[-1]
        step = f"{label}:{len(links)}"
        for trial in range(GENERIC_TRIALS):
            b, nxt = link_once(cur, sampler, f"{step}:r{trial}")
            if nxt.mingens_count() < mus[-1]:
                break
        else:
            raise GenericityFailure(
                f"minimal generators stuck at {mus[-1]} on step "
                f"{len(links)}",
                trials=GENERIC_TRIALS,
            )
        links.append(b)
        es.append(b.colength())
        ideals.append(nxt)
        mus.append(nxt.mingens_count())
    es.append(ideals[-1].colength())
    return LinkChain(ideals, links, es, mus)


def colength_by_links(chain: LinkChain) -> int:
    """Alternating sum of the chain multiplicities; must match a_0.

    Each link contributes e(a_i) = l(R/a_i) + l(R/a_{i+1}), so the sum
    telescopes to the colength of the starting ideal.  A mismatch means a
    link was accepted that should not have been, and is raised rather
    than returned.
    """
    total = sum(
        (-1) ** i * e for i, e in enumerate(chain.multiplicities)
    )
    expected = chain.ideals[0].colength()
    if total != expected:
        raise VerificationError(
            "alternating multiplicity sum missed the colength",
            expected=expected,
            actual=total,
        )
    return total


def _half_up(n: int) -> int:
    return -(-n // 2)


def _chain_shape(rank: int, i: int) -> tuple[int, int]:
    """Rows and columns of the i-th trailing block of an r x (r+1) matrix."""
    return rank - 2 * _half_up(i - 1), rank + 1 - 2 * _half_up(i)


def _designated_link(block, parity_even: bool, field) -> Ideal:
    """The two maximal minors of a block that keep the next block whole.

    A block one column wider than tall loses its first two columns at the
    next step; the designated generators are the minors using the kept
    columns plus one of the doomed pair.  A block one column narrower
    than tall loses its first two rows, and the designated generators
    omit one of those.
    """
    if parity_even:
        g1 = determinant([[row[c] for c in range(len(row)) if c != 1]
                          for row in block])
        g2 = determinant([[row[c] for c in range(len(row)) if c != 0]
                          for row in block])
    else:
        g1 = determinant([list(row) for row in block[1:]])
        g2 = determinant([list(block[0])] + [list(r) for r in block[2:]])
    return Ideal([g1, g2], field)


def trailing_chain(
    pres: Presentation, sampler: GeneralSampler, label: str = "trail"
) -> LinkChain:
    """Certified linkage chain of the trailing submatrices of pres.

    pres must be r x (r+1) with entries already in general position (a
    transformed reduction).  a_i is the maximal-minor ideal of the last
    r - 2*ceil((i-1)/2) rows and last r + 1 - 2*ceil(i/2) columns; the
    certificate recomputes every claimed relationship and raises
    GenericityFailure on the first miss, so the caller can transform
    again.
    """
    r = pres.rank
    if pres.cols != r + 1:
        raise ValueError(
            f"trailing chain needs an r x (r+1) matrix, got {r} x {pres.cols}"
        )
    mat = pres.matrix
    blocks = []
    ideals = []
    for i in range(r):
        nr, nc = _chain_shape(r, i)
        block = [row[-nc:] for row in mat[-nr:]]
        blocks.append(block)
        ideals.append(Ideal(minors(block, r - i), pres.field))

    try:
        mus = [a.mingens_count() for a in ideals]
    except NonFiniteColength as exc:
        raise GenericityFailure(
            f"block minor ideal of infinite colength: {exc}"
        ) from exc
    for i in range(r - 1):
        if mus[i + 1] >= mus[i]:
            raise GenericityFailure(
                f"block minor ideals do not shed a generator at step {i}: "
                f"{mus[i]} then {mus[i + 1]}"
            )
    if mus[-1] != 2:
        raise GenericityFailure(
            f"terminal block is not a complete intersection (mu={mus[-1]})"
        )

    links: list[Ideal] = []
    es: list[int] = []
    for i in range(r - 1):
        e_i = minimal_reduction(ideals[i], sampler, f"{label}:e{i}").colength
        b = _designated_link(blocks[i], i % 2 == 0, pres.field)
        try:
            b_len = b.colength()
        except NonFiniteColength as exc:
            raise GenericityFailure(
                f"designated minor pair at step {i} shares a factor"
            ) from exc
        if b_len != e_i:
            raise GenericityFailure(
                f"designated minor pair at step {i} is not a reduction "
                f"(colength {b_len} vs multiplicity {e_i})"
            )
        nxt = b.colon(ideals[i])
        if not nxt.equals(ideals[i + 1]):
            raise GenericityFailure(
                f"colon by the designated pair at step {i} missed the "
                f"next block ideal"
            )
        if not b.colon(nxt).equals(ideals[i]):
            raise GenericityFailure(
                f"involution failed at step {i} of the block chain"
            )
        links.append(b)
        es.append(e_i)
    es.append(ideals[-1].colength())
    return LinkChain(ideals, links, es, mus, matrix=pres)


def _scalar_det(m, field):
    if len(m) == 1:
        return m[0][0]
    out = field.zero
    for j, lead in enumerate(m[0]):
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = field.mul(lead, _scalar_det(sub, field))
        out = field.add(out, term) if j % 2 == 0 else field.sub(out, term)
    return out


def random_invertible(rng, sampler: GeneralSampler, n: int):
    field = sampler.field
    for _ in range(20):
        m = [[sampler.coefficient(rng) for _ in range(n)] for _ in range(n)]
        if not field.is_zero(_scalar_det(m, field)):
            return m
    raise GenericityFailure(f"no invertible {n} x {n} scalar matrix drawn")


def scalar_transformed(pres: Presentation, left, right) -> Presentation:
    """left * matrix * right over the scalars, entrywise."""
    field = pres.field
    rows = []
    for i in range(pres.rank):
        row = []
        for j in range(pres.cols):
            acc = Polynomial.zero(field, 2)
            for s in range(pres.rank):
                for t in range(pres.cols):
                    acc = acc + pres.matrix[s][t].scale(
                        field.mul(left[i][s], right[t][j])
                    )
            row.append(acc)
        rows.append(row)
    return Presentation(rows, field)


def _block_lower(rng, sampler: GeneralSampler, head: int, tail: int):
    """Invertible scalar matrix mixing the last tail coordinates only
    among themselves: [[A, 0], [C, B]] with A, B invertible, C random."""
    if tail == 0:
        return random_invertible(rng, sampler, head)
    field = sampler.field
    a = random_invertible(rng, sampler, head)
    b = random_invertible(rng, sampler, tail)
    out = []
    for i in range(head):
        out.append(a[i] + [field.zero] * tail)
    for i in range(tail):
        out.append(
            [sampler.coefficient(rng) for _ in range(head)] + b[i]
        )
    return out


def transformed_chain(
    pres: Presentation,
    sampler: GeneralSampler,
    label: str = "tchain",
    protect: int = 0,
) -> LinkChain:
    """Trailing block chain after certified random changes of basis.

    Row operations are arbitrary; column operations mix the last protect
    columns only among themselves, so the maximal-minor ideal of that
    block survives the operations exactly.  Failed certification means
    the operations were not general enough; fresh ones are drawn, a
    bounded number of times.
    """
    last = None
    for attempt in range(TRANSFORM_TRIALS):
        rng = sampler.stream(f"{label}:ops{attempt}")
        left = random_invertible(rng, sampler, pres.rank)
        right = _block_lower(rng, sampler, pres.cols - protect, protect)
        try:
            return trailing_chain(
                scalar_transformed(pres, left, right), sampler, f"{label}:c{attempt}"
            )
        except GenericityFailure as exc:
            last = exc
    raise GenericityFailure(
        f"no drawn row and column operations certified the block chain: {last}",
        trials=TRANSFORM_TRIALS,
    )


def submatrix_chain(
    pres: Presentation, sampler: GeneralSampler, label: str = "subchain"
) -> LinkChain:
    """Linkage chain read off a transformed reduction of the column span.

    Reduces pres to r+1 general columns, then delegates to
    transformed_chain with nothing protected.
    """
    cert = minimal_reduction_module(pres, sampler, f"{label}:mod")
    U = cert.module
    if U.cols != U.rank + 1:
        raise ValueError(
            f"reduction has {U.cols} columns, expected rank+1 = {U.rank + 1}"
        )
    return transformed_chain(U, sampler, label)


def auslander_chain(
    pres: Presentation, chain: LinkChain | None = None
) -> list[Ideal]:
    """Zeroth Fitting ideals of the successive dual quotients.

    The dual of a quotient presented by a matrix is presented by its
    transpose; killing the last two generators of the dual then chops two
    trailing rows or columns.  Reading the mirrored matrix from the front
    keeps that bookkeeping aligned with the trailing block chain, and for
    each i the transposed leading block presents a quotient whose zeroth
    Fitting ideal must reproduce a_i, checked when a chain is supplied.
    """
    r = pres.rank
    if pres.cols != r + 1:
        raise ValueError(
            f"dual chain needs an r x (r+1) matrix, got {r} x {pres.cols}"
        )
    mirrored = [list(reversed(row)) for row in reversed(pres.matrix)]
    out = []
    for i in range(r):
        nr, nc = _chain_shape(r, i)
        lead = [row[:nc] for row in mirrored[:nr]]
        dual = [[lead[s][t] for s in range(nr)] for t in range(nc)]
        out.append(Ideal(minors(dual, r - i), pres.field))
    if chain is not None:
        for i, (got, want) in enumerate(zip(out, chain.ideals)):
            if not got.equals(want):
                raise VerificationError(
                    f"dual quotient {i} has the wrong Fitting ideal"
                )
    return out


def br_by_links(
    pres: Presentation, sampler: GeneralSampler, label: str = "brlinks"
) -> LinkBrReport:
    """Multiplicity of the column span from its linkage chain.

    e(Fitt_0) of the module plus the alternating chain multiplicities
    from index 1 on equals the Buchsbaum-Rim multiplicity; the value is
    recomputed through the reduction route and a mismatch raises instead
    of returning a wrong number.
    """
    chain = submatrix_chain(pres, sampler, f"{label}:chain")
    lead = pres.fitting_ideal(0)
    e0 = minimal_reduction(lead, sampler, f"{label}:lead").colength
    value = e0 + sum(
        (-1) ** i * chain.multiplicities[i]
        for i in range(1, len(chain.multiplicities))
    )
    reference = buchsbaum_rim(pres, route="reduction", sampler=sampler).value
    if value != reference:
        raise VerificationError(
            "chain formula disagreed with the reduction multiplicity",
            expected=reference,
            actual=value,
        )
    return LinkBrReport(
        value=value, leading_multiplicity=e0, chain=chain, reference=reference
    )
