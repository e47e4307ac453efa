"""Submodules of a free module and the Buchsbaum-Rim multiplicity.

A module is given by the columns of a rank x cols matrix over the ring,
viewed inside F = R^rank.  The Buchsbaum-Rim multiplicity of a finite
colength submodule M comes by two routes:

* reduction: drop to a minimal reduction U spanned by rank+1 general
  column combinations; the colength of the ideal of maximal minors of U
  is the multiplicity.  Certified by a second independent draw.
* lambda: colengths of symmetric powers S_n(F)/M^n grow as a polynomial
  of degree rank+1 whose normalized leading coefficient is the
  multiplicity, so iterated differences stabilize to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from itertools import combinations_with_replacement

from .errors import GenericityFailure, NoStabilization, VerificationError
from .fields import QQ
from .groebner import module_groebner, truncated_module_degree_counts
from .ideals import Ideal, screened_primary, stabilized_colength
from .matrices import minors
from .multiplicity import minimal_reduction
from .poly import Polynomial, parse_many
from .sampling import GENERIC_TRIALS, GeneralSampler, random_matrix

LAMBDA_CAP = 10
LAMBDA_RUN = 3
LAMBDA_MAX_RANK = 3


class Presentation:
    """Columns of a polynomial matrix spanning a submodule of R^rank."""

    __slots__ = ("field", "rank", "matrix", "_minors")

    def __init__(self, matrix, field=None):
        rows = [tuple(r) for r in matrix]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        if field is None:
            field = rows[0][0].field
        self.field = field
        self.rank = len(rows)
        self.matrix = tuple(
            tuple(p if p.arity == 2 else p.restrict_arity(2) for p in r)
            for r in rows
        )
        self._minors = {}

    @classmethod
    def parse(cls, text: str, field=QQ) -> "Presentation":
        """Rows separated by semicolons, entries by commas."""
        rows = [parse_many(chunk, field, arity=2) for chunk in text.split(";")]
        return cls(rows, field)

    def __repr__(self):
        rows = "; ".join(
            ", ".join(str(p) for p in row) for row in self.matrix
        )
        return f"Presentation({self.rank}x{self.cols}: {rows})"

    @property
    def cols(self) -> int:
        return len(self.matrix[0])

    def columns(self):
        return [
            tuple(self.matrix[i][j] for i in range(self.rank))
            for j in range(self.cols)
        ]

    def submatrix(self, rows, cols) -> "Presentation":
        return Presentation(
            [[self.matrix[i][j] for j in cols] for i in rows], self.field
        )

    def transpose(self) -> "Presentation":
        return Presentation(
            [
                [self.matrix[i][j] for i in range(self.rank)]
                for j in range(self.cols)
            ],
            self.field,
        )

    def minor_ideal(self, size: int) -> Ideal:
        """Ideal of size x size minors; unit for size 0, zero if oversized."""
        if size not in self._minors:
            self._minors[size] = Ideal(
                minors([list(r) for r in self.matrix], size), self.field
            )
        return self._minors[size]

    def fitting_ideal(self, j: int) -> Ideal:
        """j-th Fitting ideal of the cokernel R^rank / (columns)."""
        if j >= self.rank:
            return Ideal([Polynomial.constant(1, self.field, 2)], self.field)
        return self.minor_ideal(self.rank - j)

    def colength(self, method: str | None = None) -> int:
        """Length of R^rank / (columns), localized at the origin."""
        rank = self.rank

        def linear(cols, cutoff, p):
            from .lincolen import module_colength_histogram

            return module_colength_histogram(cols, rank, cutoff, p)

        def grob(cols, cutoff):
            return truncated_module_degree_counts(cols, rank, cutoff)

        return stabilized_colength(
            self.columns(),
            self.field.characteristic,
            method,
            linear_histogram=linear,
            gb_histogram=grob,
        )

    def contains_vector(self, vector) -> bool:
        return module_groebner(self.columns()).contains(vector)

    def contains_columns(self, other: "Presentation") -> bool:
        gb = module_groebner(self.columns())
        return all(gb.contains(v) for v in other.columns())


@dataclass
class ModuleReductionCertificate:
    module: "Presentation"
    minors_colength: int
    draws: int


@dataclass
class BuchsbaumRimReport:
    value: int
    route: str
    by_route: dict = dataclass_field(default_factory=dict)
    reduction: "Presentation | None" = None


def minimal_reduction_module(
    P: Presentation, sampler: GeneralSampler, label: str = "modred"
) -> ModuleReductionCertificate:
    """rank+1 general column combinations spanning a minimal reduction.

    A presentation with at most rank+1 columns is returned unchanged; its
    maximal minor colength is still computed, since every caller wants it.
    """
    if sampler.field != P.field:
        raise ValueError("sampler and presentation fields differ")
    if P.cols <= P.rank + 1:
        return ModuleReductionCertificate(
            module=P, minors_colength=P.fitting_ideal(0).colength(), draws=1
        )
    cols = P.columns()
    last = None
    for attempt in range(GENERIC_TRIALS):
        results = []
        for tag in ("a", "b"):
            rng = sampler.stream(f"{label}:{attempt}:{tag}")
            picked = [
                sampler.vector_combination(cols, rng)
                for _ in range(P.rank + 1)
            ]
            U = Presentation(
                [[v[i] for v in picked] for i in range(P.rank)], P.field
            )
            results.append((U, U.fitting_ideal(0).colength()))
        (u1, n1), (_, n2) = results
        if n1 == n2:
            return ModuleReductionCertificate(
                module=u1, minors_colength=n1, draws=2
            )
        last = (n1, n2)
    raise GenericityFailure(
        f"reduction minor colengths kept disagreeing: {last}",
        trials=GENERIC_TRIALS,
    )


def is_reduction(
    P: Presentation, U: Presentation, sampler: GeneralSampler
) -> bool:
    """Whether U is a reduction of P inside the same free module.

    Checks containment of the columns and equality of the multiplicities
    of the maximal minor ideals, which transfers reduction questions from
    modules to ideals.
    """
    if U.rank != P.rank:
        return False
    if not P.contains_columns(U):
        return False
    e_p = minimal_reduction(P.fitting_ideal(0), sampler, "isred:p").colength
    e_u = minimal_reduction(U.fitting_ideal(0), sampler, "isred:u").colength
    return e_p == e_u


def symmetric_power_columns(P: Presentation, n: int):
    """Degree n products of the columns inside S_n(R^rank).

    Basis of S_n: multisets over the rank coordinates, ordered
    lexicographically by exponent vector.  Each generating product is the
    expansion of a size n multiset of columns.
    """
    rank = P.rank
    basis = _symmetric_basis(rank, n)
    index = {alpha: i for i, alpha in enumerate(basis)}
    zero = Polynomial.zero(P.field, 2)
    out = []
    for pick in combinations_with_replacement(P.columns(), n):
        acc = {(0,) * rank: Polynomial.constant(1, P.field, 2)}
        for v in pick:
            nxt = {}
            for alpha, coeff in acc.items():
                for i in range(rank):
                    if v[i].is_zero():
                        continue
                    beta = list(alpha)
                    beta[i] += 1
                    beta = tuple(beta)
                    term = coeff * v[i]
                    if beta in nxt:
                        nxt[beta] = nxt[beta] + term
                    else:
                        nxt[beta] = term
            acc = nxt
        vec = [zero] * len(basis)
        for alpha, coeff in acc.items():
            vec[index[alpha]] = coeff
        out.append(tuple(vec))
    return out, len(basis)


def _symmetric_basis(rank, n):
    out = []

    def rec(prefix, left):
        if len(prefix) == rank - 1:
            out.append(tuple(prefix) + (left,))
            return
        for v in range(left, -1, -1):
            rec(prefix + [v], left - v)

    rec([], n)
    return out


def lambda_value(P: Presentation, n: int, method: str | None = None) -> int:
    """Colength of S_n(R^rank) modulo degree n products of the columns."""
    if n == 0:
        return 0
    cols, rank = symmetric_power_columns(P, n)

    def linear(vecs, cutoff, p):
        from .lincolen import module_colength_histogram

        return module_colength_histogram(vecs, rank, cutoff, p)

    def grob(vecs, cutoff):
        return truncated_module_degree_counts(vecs, rank, cutoff)

    return stabilized_colength(
        cols,
        P.field.characteristic,
        method,
        linear_histogram=linear,
        gb_histogram=grob,
    )


def _lambda_route_value(P: Presentation) -> int:
    if P.rank > LAMBDA_MAX_RANK:
        raise NoStabilization(
            f"symmetric power route capped at rank {LAMBDA_MAX_RANK}"
        )
    order = P.rank + 1
    values = [lambda_value(P, n) for n in range(order + 1)]
    run: list[int] = []
    for n in range(order + 1, LAMBDA_CAP + 1):
        values.append(lambda_value(P, n))
        diff = list(values)
        for _ in range(order):
            diff = [b - a for a, b in zip(diff, diff[1:])]
        d = diff[-1]
        if run and run[-1] == d:
            run.append(d)
        else:
            run = [d]
        if len(run) >= LAMBDA_RUN:
            return d
    raise NoStabilization(
        f"normalized differences of symmetric colengths, cap {LAMBDA_CAP}"
    )


def buchsbaum_rim(
    P: Presentation,
    route: str = "reduction",
    sampler: GeneralSampler | None = None,
    seed: int = 0,
) -> BuchsbaumRimReport:
    """Buchsbaum-Rim multiplicity of the column span inside R^rank."""
    if sampler is None:
        sampler = GeneralSampler(seed, P.field)
    route = route.lower()
    if route == "reduction":
        cert = minimal_reduction_module(P, sampler)
        return BuchsbaumRimReport(
            value=cert.minors_colength, route=route, reduction=cert.module
        )
    if route == "lambda":
        return BuchsbaumRimReport(value=_lambda_route_value(P), route=route)
    if route == "all":
        by = {}
        cert = minimal_reduction_module(P, sampler)
        by["reduction"] = cert.minors_colength
        by["lambda"] = _lambda_route_value(P)
        if len(set(by.values())) != 1:
            raise VerificationError(
                "multiplicity routes disagree",
                expected=by["reduction"],
                actual=by,
            )
        return BuchsbaumRimReport(
            value=by["reduction"], route=route, by_route=by, reduction=cert.module
        )
    raise ValueError(f"unknown Buchsbaum-Rim route {route!r}")


def random_module(
    sampler: GeneralSampler,
    rank: int,
    cols: int,
    label: str = "randmod",
    max_exp: int = 3,
    extra_terms: int = 1,
) -> Presentation:
    """Random presentation with entries in m and finite colength.

    Each row gets a pure x power and a pure y power in random columns;
    without them the maximal minors almost always share a factor and the
    colength is infinite.  Draws are still screened on the zeroth
    Fitting ideal being m-primary, by a shallow truncation over prime
    fields so that a reject stays cheap.
    """
    field = sampler.field
    rng = sampler.stream(label)
    for _ in range(40):
        mat = random_matrix(
            rng,
            rank,
            cols,
            max_exp=max_exp,
            field=field,
            extra_terms=extra_terms,
            min_total=1,
        )
        for row in mat:
            cx, cy = rng.sample(range(cols), 2)
            row[cx] = Polynomial.from_monomial(
                (rng.randint(1, max_exp), 0), field, sampler.coefficient(rng)
            )
            row[cy] = Polynomial.from_monomial(
                (0, rng.randint(1, max_exp)), field, sampler.coefficient(rng)
            )
        P = Presentation(mat, field)
        if screened_primary(P.fitting_ideal(0)):
            return P
    raise GenericityFailure("no finite-colength presentation in 40 draws")
