"""Coefficient fields.

Two fields are supported: the rationals (authoritative, used by default)
and a prime field of large characteristic offered as a fast mode.  Rational
coefficients are stdlib Fractions; prime-field coefficients are plain ints
in [0, p).  A field object bundles the arithmetic so polynomial code never
branches on the coefficient representation.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 2**31 - 1


def _is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, ample for word-size moduli."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers with exact Fraction arithmetic."""

    name = "QQ"
    characteristic = 0

    def coerce(self, v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise TypeError(f"cannot coerce {v!r} into QQ")

    def from_pair(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return 1 / a

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """Z/p for a prime p.  Elements are ints reduced into [0, p)."""

    characteristic: int

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def coerce(self, v) -> int:
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            return self.from_pair(v.numerator, v.denominator)
        raise TypeError(f"cannot coerce {v!r} into {self.name}")

    def from_pair(self, num: int, den: int) -> int:
        d = den % self.p
        if d == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes mod {self.p}")
        return num * pow(d, -1, self.p) % self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def field_by_name(name: str):
    """CLI helper: 'q' for the rationals, 'fp' or 'fp:<prime>' for a prime field."""
    low = name.lower()
    if low in ("q", "qq"):
        return QQ
    if low == "fp":
        return PrimeField()
    if low.startswith("fp:"):
        return PrimeField(int(low[3:]))
    raise ValueError(f"unknown field {name!r}")
