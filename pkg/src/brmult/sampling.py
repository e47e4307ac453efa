"""Deterministic sampling of general elements and test instances.

Every random draw in the library flows through a GeneralSampler: a master
seed plus a string label is hashed to an independent substream, so results
never depend on call order and a (seed, label) pair always replays the
same coefficients.  Coefficients come from a fixed symmetric integer box;
general position then holds with margin over the rationals and over large
prime fields, and the callers that rely on it certify by drawing twice.
"""

from __future__ import annotations

import hashlib
import random

from .fields import QQ
from .monomial import MonomialIdeal
from .poly import Polynomial

COEFF_BOX = 997
GENERIC_TRIALS = 3


class GeneralSampler:
    """Labelled source of reproducible general coefficients."""

    def __init__(self, seed: int, field=QQ):
        self.seed = int(seed)
        self.field = field

    def stream(self, label: str) -> random.Random:
        digest = hashlib.sha256(f"{self.seed}:{label}".encode()).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))

    def coefficient(self, rng: random.Random):
        c = rng.randint(1, COEFF_BOX) * rng.choice((1, -1))
        return self.field.coerce(c)

    def combination(self, polys, rng: random.Random) -> Polynomial:
        """General linear combination with nonzero box coefficients."""
        polys = list(polys)
        if not polys:
            raise ValueError("nothing to combine")
        out = Polynomial.zero(self.field, polys[0].arity)
        for g in polys:
            out = out + g.scale(self.coefficient(rng))
        return out

    def vector_combination(self, columns, rng: random.Random):
        """Componentwise general combination of module columns."""
        columns = [tuple(v) for v in columns]
        if not columns:
            raise ValueError("nothing to combine")
        rank = len(columns[0])
        arity = columns[0][0].arity
        acc = [Polynomial.zero(self.field, arity) for _ in range(rank)]
        for v in columns:
            c = self.coefficient(rng)
            for i in range(rank):
                acc[i] = acc[i] + v[i].scale(c)
        return tuple(acc)


def random_monomial_ideal(
    rng: random.Random, max_gens: int = 5, max_exp: int = 12
) -> MonomialIdeal:
    """Seeded m-primary monomial ideal: two pure powers plus interior picks."""
    a = rng.randint(1, max_exp)
    b = rng.randint(1, max_exp)
    exps = [(a, 0), (0, b)]
    for _ in range(rng.randint(0, max_gens - 2)):
        if a > 1 and b > 1:
            exps.append((rng.randint(1, a - 1), rng.randint(1, b - 1)))
    return MonomialIdeal(exps)


def random_matrix(
    rng: random.Random,
    rank: int,
    cols: int,
    max_exp: int = 4,
    field=QQ,
    extra_terms: int = 1,
    min_total: int = 0,
):
    """Random presentation matrix with small monomial or binomial entries.

    Entries are nonzero monomials with box coefficients, occasionally a
    binomial, arranged so every row carries at least one entry.  Suitable
    for exercising rank 2 and 3 module pipelines.  min_total=1 keeps
    every entry inside the maximal ideal, which the Bourbaki
    construction requires.
    """

    def exps():
        while True:
            pair = (rng.randint(0, max_exp), rng.randint(0, max_exp))
            if sum(pair) >= min_total:
                return pair

    mat = []
    for _ in range(rank):
        row = []
        for _ in range(cols):
            p = Polynomial.from_monomial(
                exps(),
                field,
                field.coerce(rng.randint(1, COEFF_BOX) * rng.choice((1, -1))),
            )
            if rng.random() < 0.25 * extra_terms:
                p = p + Polynomial.from_monomial(
                    exps(),
                    field,
                    field.coerce(rng.randint(1, COEFF_BOX) * rng.choice((1, -1))),
                )
            row.append(p)
        mat.append(row)
    return mat
