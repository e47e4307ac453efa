"""Hilbert-Samuel multiplicity of finite colength ideals.

Three routes, agreeing on their common domain and cross-checked by the
"all" mode:

* reduction: two general elements span a minimal reduction, whose
  colength is the multiplicity.  Certified by drawing the pair twice from
  independent streams and insisting on equal colengths.
* difference: second differences of n -> colength(a^n) become the
  multiplicity once n clears the reduction number; three equal values in
  a row are taken as stabilization.
* newton: for monomial ideals, twice the area below the Newton polygon.
  Closure invariance of multiplicity makes this exact, no genericity
  needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import (
    GenericityFailure,
    NonFiniteColength,
    NoStabilization,
    VerificationError,
)
from .ideals import Ideal
from .sampling import GENERIC_TRIALS, GeneralSampler

DIFFERENCE_CAP = 12
DIFFERENCE_RUN = 3


@dataclass
class ReductionCertificate:
    """Minimal reduction with the agreeing colength of a second draw."""

    ideal: Ideal
    colength: int
    draws: int


@dataclass
class MultiplicityReport:
    value: int
    route: str
    by_route: dict = dataclass_field(default_factory=dict)
    reduction: Ideal | None = None


def minimal_reduction(
    a: Ideal, sampler: GeneralSampler, label: str = "minred"
) -> ReductionCertificate:
    """Two-generated minimal reduction of an m-primary ideal.

    With two or fewer generators the ideal is its own minimal reduction.
    Otherwise two general combinations of the generators are drawn; a
    second independent draw must reproduce the colength, else the attempt
    does not count as general and is retried.
    """
    if sampler.field != a.field:
        raise ValueError("sampler and ideal fields differ")
    if len(a.gens) <= 2:
        return ReductionCertificate(ideal=a, colength=a.colength(), draws=1)
    last = None
    for attempt in range(GENERIC_TRIALS):
        pairs = []
        for tag in ("a", "b"):
            rng = sampler.stream(f"{label}:{attempt}:{tag}")
            b = Ideal(
                [
                    sampler.combination(a.gens, rng),
                    sampler.combination(a.gens, rng),
                ],
                a.field,
            )
            try:
                pairs.append((b, b.colength()))
            except NonFiniteColength:
                break
        if len(pairs) < 2:
            continue
        (b1, n1), (_, n2) = pairs
        if n1 == n2:
            return ReductionCertificate(ideal=b1, colength=n1, draws=2)
        last = (n1, n2)
    raise GenericityFailure(
        f"reduction colengths kept disagreeing: {last}", trials=GENERIC_TRIALS
    )


def _difference_value(a: Ideal) -> int:
    values = [0]
    run: list[int] = []
    for n in range(1, DIFFERENCE_CAP + 1):
        values.append(a.power(n).colength())
        if n >= 2:
            d2 = values[n] - 2 * values[n - 1] + values[n - 2]
            if run and run[-1] == d2:
                run.append(d2)
            else:
                run = [d2]
            if len(run) >= DIFFERENCE_RUN:
                return d2
    raise NoStabilization(
        f"second differences of power colengths, cap {DIFFERENCE_CAP}"
    )


def multiplicity(
    a: Ideal,
    route: str = "reduction",
    sampler: GeneralSampler | None = None,
    seed: int = 0,
) -> MultiplicityReport:
    """Multiplicity e(a) by the requested route ("all" compares them)."""
    if sampler is None:
        sampler = GeneralSampler(seed, a.field)
    route = route.lower()
    if route == "reduction":
        cert = minimal_reduction(a, sampler)
        return MultiplicityReport(
            value=cert.colength, route=route, reduction=cert.ideal
        )
    if route == "difference":
        return MultiplicityReport(value=_difference_value(a), route=route)
    if route == "newton":
        mono = a.monomial_form()
        if mono is None:
            raise ValueError("newton route needs monomial generators")
        return MultiplicityReport(value=mono.newton_multiplicity(), route=route)
    if route == "all":
        by = {}
        cert = minimal_reduction(a, sampler)
        by["reduction"] = cert.colength
        by["difference"] = _difference_value(a)
        if a.monomial_form() is not None:
            by["newton"] = a.monomial_form().newton_multiplicity()
        vals = set(by.values())
        if len(vals) != 1:
            raise VerificationError(
                "multiplicity routes disagree", expected=by["reduction"], actual=by
            )
        return MultiplicityReport(
            value=vals.pop(), route=route, by_route=by, reduction=cert.ideal
        )
    raise ValueError(f"unknown multiplicity route {route!r}")
