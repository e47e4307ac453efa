"""Bourbaki ideals of modules and the multiplicity formulas built on them.

A rank-r module M inside F = R^r with general reduction columns
u_1, ..., u_{r+1} determines a free submodule G spanned by r-1 of them;
F/G is isomorphic to an m-primary ideal I through the determinant map
v -> det(V | v) on the kernel columns V, and M lands on a subideal J.
The Buchsbaum-Rim multiplicity of M is then e(J) - e(I) up to chain
corrections, and in full generality an inclusion-exclusion over three
quotients I/J, I/J', I/I' with their own linkage chains.  The value of
e(Fitt_0(I/J')) genuinely depends on which minimal reduction J' is
taken; a fixed witness instance reproducing that dependence is kept
here as a regression anchor.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .errors import GenericityFailure, NonFiniteColength, VerificationError
from .fields import PrimeField
from .ideals import Ideal, maximal_ideal, screened_primary
from .linkage import (
    TRANSFORM_TRIALS,
    LinkChain,
    random_invertible,
    scalar_transformed,
    submatrix_chain,
    trailing_chain,
    transformed_chain,
)
from .matrices import determinant, minors
from .modules import Presentation, buchsbaum_rim, minimal_reduction_module
from .multiplicity import minimal_reduction
from .poly import Polynomial
from .sampling import GENERIC_TRIALS, GeneralSampler


@dataclass
class BourbakiData:
    """Free kernel G, ideal I = F/G, and the image J of the module in I."""

    kernel: Presentation
    bourbaki_ideal: Ideal
    module_image: Ideal
    witness: Callable
    reduction: Presentation | None

    @property
    def field(self):
        return self.kernel.field


@dataclass
class BourbakiBrReport:
    value: int
    e_image: int
    e_ideal: int
    chain: LinkChain | None
    reference: int


@dataclass
class AllRankData:
    """Everything the rank-independent multiplicity formula consumes.

    u_tilde holds the reduction columns z_r..z_2r, n_tilde the kernel
    columns followed by z_{2r-1}, z_{2r}, i_tilde (rank 3 and up) the
    kernel columns followed by the constant preimages of the reduction
    of I.  certified is False only for hand-built regression data that
    deliberately skips the general-position checks.
    """

    module: Presentation
    kernel: Presentation
    bourbaki_ideal: Ideal
    module_image: Ideal
    j_prime: Ideal
    i_prime: Ideal
    u_tilde: Presentation | None
    n_tilde: Presentation
    i_tilde: Presentation | None
    u_chain: LinkChain | None
    n_chain: LinkChain | None
    i_chain: LinkChain | None
    e_ideal: int
    e_image: int
    sampler: GeneralSampler
    certified: bool


@dataclass
class AllRankReport:
    value: int
    summands: dict
    reference: int


def _witness(kernel: Presentation) -> Callable:
    """Determinant against the kernel columns: the map F/G -> I."""
    rows = kernel.matrix

    def image(vector):
        return determinant(
            [list(rows[i]) + [vector[i]] for i in range(len(rows))]
        )

    return image


def _from_columns(columns, field) -> Presentation:
    rank = len(columns[0])
    return Presentation(
        [[col[i] for col in columns] for i in range(rank)], field
    )


def _no_unit_entries(M: Presentation) -> bool:
    for row in M.matrix:
        for p in row:
            if any(sum(e) == 0 for e, _ in p.terms):
                return False
    return True


def bourbaki_pair(
    M: Presentation,
    sampler: GeneralSampler,
    label: str = "bourbaki",
    skip_subsets: bool = False,
) -> BourbakiData:
    """Kernel columns, the ideal I they cut out, and the image J of M.

    Candidate kernels are tried in a fixed order: subsets of the given
    columns first (matrices written down by hand usually contain their
    own syzygy column), then general combinations.  A candidate counts
    only if I is m-primary and the lengths certify l(I/J) = l(F/M),
    which pins the determinant map as an isomorphism.
    """
    r = M.rank
    if r < 2:
        raise ValueError("Bourbaki construction needs rank at least 2")
    if not _no_unit_entries(M):
        raise ValueError(
            "presentation has a unit entry: split off the free summand first"
        )
    module_len = M.colength()
    columns = M.columns()
    reference: int | None = None

    def candidates():
        if not skip_subsets:
            for subset in combinations(range(M.cols), r - 1):
                yield [columns[t] for t in subset], subset
        for attempt in range(TRANSFORM_TRIALS):
            rng = sampler.stream(f"{label}:v{attempt}")
            yield [
                sampler.vector_combination(columns, rng) for _ in range(r - 1)
            ], None

    for vee_cols, subset in candidates():
        vee = _from_columns(vee_cols, M.field)
        ideal_i = Ideal(minors([list(row) for row in vee.matrix], r - 1), M.field)
        # hand-picked columns either certify shallow or are not worth a
        # deep scan; general draws get the full depth they deserve
        if subset is not None:
            if not screened_primary(ideal_i):
                continue
        elif not ideal_i.is_m_primary():
            continue
        witness = _witness(vee)
        ideal_j = Ideal([witness(col) for col in columns], M.field)
        try:
            gap = ideal_j.colength() - ideal_i.colength()
        except NonFiniteColength:
            continue
        if gap != module_len:
            continue
        reduction = None
        if subset is not None and M.cols == r + 1:
            rest = [columns[t] for t in range(M.cols) if t not in subset]
            reduction = _from_columns(rest + list(vee_cols), M.field)
        else:
            if reference is None:
                reference = minimal_reduction_module(
                    M, sampler, f"{label}:ref"
                ).minors_colength
            for attempt in range(GENERIC_TRIALS):
                rng = sampler.stream(f"{label}:u{attempt}")
                extra = [
                    sampler.vector_combination(columns, rng) for _ in range(2)
                ]
                candidate = _from_columns(extra + list(vee_cols), M.field)
                try:
                    if candidate.fitting_ideal(0).colength() == reference:
                        reduction = candidate
                        break
                except NonFiniteColength:
                    continue
            if reduction is None:
                continue
        return BourbakiData(
            kernel=vee,
            bourbaki_ideal=ideal_i,
            module_image=ideal_j,
            witness=witness,
            reduction=reduction,
        )
    raise GenericityFailure(
        "no kernel choice produced an m-primary Bourbaki ideal "
        "with the right quotient length"
    )


def br_by_bourbaki(
    M: Presentation, sampler: GeneralSampler, label: str = "brbk"
) -> BourbakiBrReport:
    """e(J) - e(I) plus chain corrections; checked against the reduction route.

    Rank 1 degenerates to the multiplicity of the ideal of entries, rank
    2 needs no correction at all, and higher ranks append the linkage
    chain multiplicities of the reduction matrix from index 2 on.
    """
    if M.rank == 1:
        ideal = Ideal(list(M.matrix[0]), M.field)
        e = minimal_reduction(ideal, sampler, f"{label}:r1").colength
        reference = buchsbaum_rim(M, route="reduction", sampler=sampler).value
        if e != reference:
            raise VerificationError(
                "rank-1 multiplicity mismatch", expected=reference, actual=e
            )
        return BourbakiBrReport(
            value=e, e_image=e, e_ideal=0, chain=None, reference=reference
        )
    last = None
    for attempt in range(TRANSFORM_TRIALS):
        pair = bourbaki_pair(
            M, sampler, f"{label}:p{attempt}", skip_subsets=attempt > 0
        )
        e_j = minimal_reduction(
            pair.module_image, sampler, f"{label}:ej{attempt}"
        ).colength
        e_i = minimal_reduction(
            pair.bourbaki_ideal, sampler, f"{label}:ei{attempt}"
        ).colength
        value = e_j - e_i
        chain = None
        if M.rank >= 3:
            try:
                chain = transformed_chain(
                    pair.reduction,
                    sampler,
                    f"{label}:c{attempt}",
                    protect=M.rank - 1,
                )
            except GenericityFailure as exc:
                last = exc
                continue
            if not chain.ideals[1].equals(pair.bourbaki_ideal):
                raise VerificationError(
                    "chain ideal at index 1 is not the Bourbaki ideal"
                )
            value += sum(
                (-1) ** i * chain.multiplicities[i] for i in range(2, M.rank)
            )
        reference = buchsbaum_rim(M, route="reduction", sampler=sampler).value
        if value != reference:
            raise VerificationError(
                "Bourbaki formula disagreed with the reduction multiplicity",
                expected=reference,
                actual=value,
            )
        return BourbakiBrReport(
            value=value,
            e_image=e_j,
            e_ideal=e_i,
            chain=chain,
            reference=reference,
        )
    raise GenericityFailure(
        f"no reduction matrix certified its chain: {last}",
        trials=TRANSFORM_TRIALS,
    )


def assume_pipeline(
    M: Presentation,
    ideal_i: Ideal,
    ideal_j: Ideal,
    kernel: Presentation,
    sampler: GeneralSampler,
    label: str = "assume",
) -> AllRankData:
    """Certified data for the rank-independent formula.

    Draws reduction columns z_r..z_2r of M, takes J' as the image of the
    last two, and I' as a reduction of I with recorded constant
    preimages.  Five conditions are certified per draw: the z-columns
    span a reduction (minor colength agreement), J' reproduces e(J), the
    trailing chains of both u_tilde and n_tilde certify as linkage
    chains, and the shared tail ideals of the two chains coincide.  Any
    miss discards the draw; the failing condition is reported when every
    attempt misses.
    """
    r = M.rank
    field = M.field
    mu_i = ideal_i.mingens_count()
    if mu_i > r:
        raise ValueError(
            f"Bourbaki ideal needs at most {r} generators, found {mu_i}"
        )
    m_ideal = maximal_ideal(field).mul(ideal_i)
    if not all(m_ideal.contains(g) for g in ideal_j.gens):
        raise ValueError("image ideal is not inside m times the Bourbaki ideal")
    witness = _witness(kernel)
    e_i = minimal_reduction(ideal_i, sampler, f"{label}:ei").colength
    e_j = minimal_reduction(ideal_j, sampler, f"{label}:ej").colength
    reference = minimal_reduction_module(
        M, sampler, f"{label}:ref"
    ).minors_colength
    columns = M.columns()
    kernel_cols = kernel.columns()
    failing = "reduction columns"
    for attempt in range(TRANSFORM_TRIALS):
        tag = f"{label}:{attempt}"
        rng = sampler.stream(f"{tag}:z")
        zs = [sampler.vector_combination(columns, rng) for _ in range(r + 1)]
        u_tilde = _from_columns(zs, field)
        try:
            ok = u_tilde.fitting_ideal(0).colength() == reference
        except NonFiniteColength:
            ok = False
        if not ok:
            failing = "reduction columns"
            continue

        j_prime = Ideal([witness(zs[-2]), witness(zs[-1])], field)
        try:
            ok = j_prime.colength() == e_j
        except NonFiniteColength:
            ok = False
        if not ok:
            failing = "image reduction"
            continue

        n_tilde = _from_columns(list(kernel_cols) + zs[-2:], field)
        chains = _shared_tail_chains(
            u_tilde, n_tilde, sampler, f"{tag}:ch"
        )
        if isinstance(chains, str):
            failing = chains
            continue
        u_chain, n_chain = chains

        shared = [r - 1] + ([r - 2] if r % 2 == 1 and r >= 3 else [])
        if not all(
            u_chain.ideals[i].equals(n_chain.ideals[i]) for i in shared
        ):
            failing = "shared chain tail"
            continue

        i_prime, i_tilde, i_chain = ideal_i, None, None
        if r >= 3 and mu_i > 2:
            got = _ideal_reduction_with_preimages(
                kernel, witness, e_i, sampler, f"{tag}:w"
            )
            if got is None:
                failing = "kernel ideal reduction"
                continue
            i_prime, ws = got
            i_tilde = _from_columns(list(kernel_cols) + ws, field)
            if r >= 4:
                try:
                    i_chain = submatrix_chain(i_tilde, sampler, f"{tag}:ic")
                except GenericityFailure:
                    failing = "kernel ideal chain"
                    continue
        return AllRankData(
            module=M,
            kernel=kernel,
            bourbaki_ideal=ideal_i,
            module_image=ideal_j,
            j_prime=j_prime,
            i_prime=i_prime,
            u_tilde=u_tilde,
            n_tilde=n_tilde,
            i_tilde=i_tilde,
            u_chain=u_chain,
            n_chain=n_chain,
            i_chain=i_chain,
            e_ideal=e_i,
            e_image=e_j,
            sampler=sampler,
            certified=True,
        )
    raise GenericityFailure(
        f"assumption certification kept failing at: {failing}",
        trials=TRANSFORM_TRIALS,
    )


def _shared_tail_chains(
    u_tilde: Presentation,
    n_tilde: Presentation,
    sampler: GeneralSampler,
    label: str,
):
    """Certify both trailing chains under changes of basis sharing a tail.

    One left operation and one 2x2 mix of the last two columns serve
    both matrices, with independent block-lower completions; the last
    two columns then stay literally equal, so the tail ideals the two
    chains must share keep coinciding by construction.  Returns the pair
    of chains, or the name of the chain that would not certify.
    """
    field = u_tilde.field
    r = u_tilde.rank
    head = u_tilde.cols - 2
    failed = "reduction chain"
    for attempt in range(TRANSFORM_TRIALS):
        rng = sampler.stream(f"{label}:ops{attempt}")
        left = random_invertible(rng, sampler, r)
        tail = random_invertible(rng, sampler, 2)

        def completion():
            a = random_invertible(rng, sampler, head)
            rows = [a[i] + [field.zero, field.zero] for i in range(head)]
            for i in range(2):
                rows.append(
                    [sampler.coefficient(rng) for _ in range(head)] + tail[i]
                )
            return rows

        try:
            u_chain = trailing_chain(
                scalar_transformed(u_tilde, left, completion()),
                sampler,
                f"{label}:u{attempt}",
            )
        except GenericityFailure:
            failed = "reduction chain"
            continue
        try:
            n_chain = trailing_chain(
                scalar_transformed(n_tilde, left, completion()),
                sampler,
                f"{label}:n{attempt}",
            )
        except GenericityFailure:
            failed = "image chain"
            continue
        return u_chain, n_chain
    return failed


def _ideal_reduction_with_preimages(
    kernel: Presentation, witness, e_i: int, sampler: GeneralSampler, label: str
):
    """Reduction (f1, f2) of I together with constant vectors mapping to it.

    Constant vectors w in F hit general scalar combinations of the
    maximal minors of the kernel under the determinant map, so drawing w
    first and defining f = det(V | w) keeps the preimage bookkeeping
    exact with no sign chasing.
    """
    field = kernel.field
    r = kernel.rank
    for attempt in range(GENERIC_TRIALS):
        rng = sampler.stream(f"{label}{attempt}")
        ws = [
            tuple(
                Polynomial.constant(sampler.coefficient(rng), field, 2)
                for _ in range(r)
            )
            for _ in range(2)
        ]
        i_prime = Ideal([witness(w) for w in ws], field)
        try:
            if i_prime.colength() == e_i:
                return i_prime, ws
        except NonFiniteColength:
            continue
    return None


def _e(ideal: Ideal, sampler: GeneralSampler, label: str) -> int:
    return minimal_reduction(ideal, sampler, label).colength


def br_all_rank(data: AllRankData) -> AllRankReport:
    """Inclusion-exclusion multiplicity over the three quotients of I.

    e(J) - e(I) + [e(Fitt_0(I/J)) + E_U] - [e(Fitt_0(I/J')) + E_N]
    + [e(Fitt_0(I/I')) + E_I], where each E sum alternates over the
    matching chain.  Ranks 2 and 3 have empty E sums; rank 2 also drops
    the I/I' term since I is its own reduction there.  The result must
    agree with the reduction-route multiplicity; a mismatch raises with
    every summand attached, which is exactly how the non-general J'
    regression witness shows itself.
    """
    r = data.module.rank
    s = data.sampler
    e_f0_ij = _e(data.module.fitting_ideal(0), s, "allrank:ij")
    if data.n_chain is not None:
        e_f0_ijp = data.n_chain.multiplicities[0]
    else:
        e_f0_ijp = _e(
            Ideal(
                minors([list(row) for row in data.n_tilde.matrix], r),
                data.module.field,
            ),
            s,
            "allrank:ijp",
        )
    eu_top = 2 * ((r - 2) // 2)
    e_u = _alternating(data.u_chain, 1, eu_top, "reduction chain")
    e_n = _alternating(data.n_chain, 1, eu_top, "image chain")
    if data.i_tilde is None:
        e_f0_iip = 0
        e_i_sum = 0
    else:
        if data.i_chain is not None:
            e_f0_iip = data.i_chain.multiplicities[0]
        else:
            e_f0_iip = _e(
                Ideal(
                    minors([list(row) for row in data.i_tilde.matrix], r),
                    data.module.field,
                ),
                s,
                "allrank:iip",
            )
        e_i_sum = _alternating(data.i_chain, 1, r - 3, "kernel ideal chain")
    rhs = (
        data.e_image
        - data.e_ideal
        + (e_f0_ij + e_u)
        - (e_f0_ijp + e_n)
        + (e_f0_iip + e_i_sum)
    )
    reference = buchsbaum_rim(data.module, route="reduction", sampler=s).value
    summands = {
        "e_J": data.e_image,
        "e_I": data.e_ideal,
        "e_F0_IJ": e_f0_ij,
        "E_U": e_u,
        "e_F0_IJprime": e_f0_ijp,
        "E_N": e_n,
        "e_F0_IIprime": e_f0_iip,
        "E_I": e_i_sum,
        "rhs": rhs,
    }
    if rhs != reference:
        raise VerificationError(
            "rank-independent formula missed the multiplicity",
            expected=reference,
            actual=summands,
        )
    return AllRankReport(value=rhs, summands=summands, reference=reference)


def _alternating(chain: LinkChain | None, lo: int, hi: int, what: str) -> int:
    if hi < lo:
        return 0
    if chain is None:
        raise ValueError(f"{what} needed for indices {lo}..{hi} but missing")
    return sum((-1) ** i * chain.multiplicities[i] for i in range(lo, hi + 1))


_WITNESS_MODULE = (
    "x^16, 0, 0, x^5*y^4, -y^14; 0, y^10, x^8*y^4, 0, x^20"
)
_WITNESS_KERNEL = "y^14; -x^20"
_WITNESS_PREIMAGES = "x^16, x^5*y^4; y^10, 0"


def dependence_example(
    sampler: GeneralSampler | None = None,
    field=None,
    fresh: bool = False,
    seed: int = 0,
) -> AllRankData:
    """Rank-2 instance where the formula value depends on the choice of J'.

    With fresh=False the fixed non-general reduction (the sum of two
    witness images and a single one) is installed without certification;
    br_all_rank then misses the true multiplicity by 4.  With fresh=True
    the pipeline draws and certifies its own J', and the formula lands
    exactly.
    """
    if field is None:
        field = PrimeField()
    if sampler is None:
        sampler = GeneralSampler(seed, field)
    M = Presentation.parse(_WITNESS_MODULE, field)
    kernel = Presentation.parse(_WITNESS_KERNEL, field)
    witness = _witness(kernel)
    ideal_i = Ideal([kernel.matrix[0][0], kernel.matrix[1][0]], field)
    ideal_j = Ideal([witness(col) for col in M.columns()], field)
    if fresh:
        return assume_pipeline(M, ideal_i, ideal_j, kernel, sampler, "dep")
    pre = Presentation.parse(_WITNESS_PREIMAGES, field)
    v1, v2 = pre.columns()
    j_prime = Ideal([witness(v1), witness(v2)], field)
    n_tilde = _from_columns(list(kernel.columns()) + [v1, v2], field)
    e_i = ideal_i.colength()
    e_j = minimal_reduction(ideal_j, sampler, "dep:ej").colength
    return AllRankData(
        module=M,
        kernel=kernel,
        bourbaki_ideal=ideal_i,
        module_image=ideal_j,
        j_prime=j_prime,
        i_prime=ideal_i,
        u_tilde=None,
        n_tilde=n_tilde,
        i_tilde=None,
        u_chain=None,
        n_chain=None,
        i_chain=None,
        e_ideal=e_i,
        e_image=e_j,
        sampler=sampler,
        certified=False,
    )
