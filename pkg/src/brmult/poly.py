"""Monomials, polynomials, parsing and printing.

The ambient ring is k[x, y] with up to two auxiliary variables t, u used for
elimination constructions, so the arity is between 1 and 4.  Polynomials
store their terms sorted descending under grevlex; that canonical order
makes equality, hashing and printing deterministic regardless of how the
polynomial was assembled.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArityMismatch, DegreeCapExceeded, FieldMismatch, ParseError
from .fields import QQ
from .orders import GREVLEX

VARS = ("x", "y", "t", "u")
MAX_ARITY = 4
DEGREE_CAP = 512


class Monomial:
    """An exponent tuple with the usual divisibility lattice."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        exps = tuple(int(e) for e in exps)
        if not 1 <= len(exps) <= MAX_ARITY:
            raise ArityMismatch(f"arity {len(exps)} outside 1..{MAX_ARITY}")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        self.exps = exps

    @property
    def arity(self) -> int:
        return len(self.exps)

    def degree(self) -> int:
        return sum(self.exps)

    def mul(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def _check(self, other):
        if len(self.exps) != len(other.exps):
            raise ArityMismatch(f"arity {len(self.exps)} vs {len(other.exps)}")

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"Monomial{self.exps}"

    def __str__(self):
        return format_monomial(self.exps)


def format_monomial(exps) -> str:
    parts = []
    for v, e in zip(VARS, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """A polynomial with coefficients in a fixed field.

    Terms are kept as a tuple of (exponent tuple, coefficient) pairs sorted
    descending under grevlex with zero coefficients removed, so two equal
    polynomials are structurally identical.
    """

    __slots__ = ("field", "arity", "terms")

    def __init__(self, field, arity, terms):
        """Build from raw (exps, coeff) pairs; combines duplicates."""
        if not 1 <= arity <= MAX_ARITY:
            raise ArityMismatch(f"arity {arity} outside 1..{MAX_ARITY}")
        acc = {}
        for exps, c in terms:
            exps = tuple(exps)
            if len(exps) != arity:
                raise ArityMismatch(f"term arity {len(exps)} in ring of arity {arity}")
            if sum(exps) > DEGREE_CAP:
                raise DegreeCapExceeded(f"total degree {sum(exps)} exceeds {DEGREE_CAP}")
            if exps in acc:
                acc[exps] = field.add(acc[exps], c)
            else:
                acc[exps] = field.coerce(c)
        self.field = field
        self.arity = arity
        self.terms = tuple(
            sorted(
                ((e, c) for e, c in acc.items() if not field.is_zero(c)),
                key=lambda t: GREVLEX.key(t[0]),
                reverse=True,
            )
        )

    @classmethod
    def zero(cls, field=QQ, arity=2):
        return cls(field, arity, ())

    @classmethod
    def constant(cls, value, field=QQ, arity=2):
        return cls(field, arity, (((0,) * arity, value),))

    @classmethod
    def variable(cls, i, field=QQ, arity=2):
        exps = tuple(1 if j == i else 0 for j in range(arity))
        return cls(field, arity, ((exps, field.one),))

    @classmethod
    def from_monomial(cls, exps, field=QQ, coeff=None):
        exps = tuple(exps)
        c = field.one if coeff is None else coeff
        return cls(field, len(exps), ((exps, c),))

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        """Max total degree of a term, -1 for the zero polynomial."""
        return max((sum(e) for e, _ in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e, _ in self.terms), default=-1)

    def leading_term(self, order=GREVLEX):
        """(exps, coeff) maximal under the order.  Errors on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order is GREVLEX:
            return self.terms[0]
        return max(self.terms, key=lambda t: order.key(t[0]))

    def leading_monomial(self, order=GREVLEX) -> Monomial:
        return Monomial(self.leading_term(order)[0])

    def coefficient(self, exps):
        exps = tuple(exps)
        for e, c in self.terms:
            if e == exps:
                return c
        return self.field.zero

    def _compat(self, other: "Polynomial"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._compat(other)
        return Polynomial(self.field, self.arity, self.terms + other.terms)

    def __sub__(self, other):
        self._compat(other)
        neg = tuple((e, self.field.neg(c)) for e, c in other.terms)
        return Polynomial(self.field, self.arity, self.terms + neg)

    def __neg__(self):
        return Polynomial(
            self.field, self.arity, tuple((e, self.field.neg(c)) for e, c in self.terms)
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._compat(other)
        field = self.field
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                c = field.mul(c1, c2)
                if e in acc:
                    acc[e] = field.add(acc[e], c)
                else:
                    acc[e] = c
        return Polynomial(field, self.arity, acc.items())

    def scale(self, c):
        c = self.field.coerce(c)
        return Polynomial(
            self.field, self.arity, tuple((e, self.field.mul(c0, c)) for e, c0 in self.terms)
        )

    def mul_monomial(self, exps, coeff=None):
        exps = tuple(exps)
        c = self.field.one if coeff is None else coeff
        return Polynomial(
            self.field,
            self.arity,
            tuple(
                (tuple(a + b for a, b in zip(e, exps)), self.field.mul(c0, c))
                for e, c0 in self.terms
            ),
        )

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1, self.field, self.arity)
        base = self
        while n:
            if n & 1:
                out = out * base
            base2 = base * base if n > 1 else base
            base, n = base2, n >> 1
        return out

    def extend_arity(self, arity: int) -> "Polynomial":
        """View in a larger ring; new variables get exponent zero."""
        if arity < self.arity:
            raise ArityMismatch("cannot shrink arity with extend_arity")
        pad = (0,) * (arity - self.arity)
        return Polynomial(self.field, arity, tuple((e + pad, c) for e, c in self.terms))

    def restrict_arity(self, arity: int) -> "Polynomial":
        """Drop trailing variables, which must not occur."""
        for e, _ in self.terms:
            if any(e[arity:]):
                raise ArityMismatch(f"term {e} uses a variable beyond arity {arity}")
        return Polynomial(self.field, arity, tuple((e[:arity], c) for e, c in self.terms))

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.arity, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"<{self}>"

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.field
        chunks = []
        for i, (e, c) in enumerate(self.terms):
            cs = field.to_str(c)
            negative = cs.startswith("-")
            mag = cs[1:] if negative else cs
            mono = format_monomial(e)
            if mono == "1":
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(chunks)


# ---------------------------------------------------------------------------
# Parsing.  Grammar (whitespace insignificant):
#   expr   := ('+' | '-')? term (('+' | '-') term)*
#   term   := coeff ('*' factor)* | factor ('*' factor)*
#   factor := var ('^' nat)?
#   coeff  := int ('/' nat)?
# The optional leading sign is needed so printing and parsing are inverse.


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        return int(self.text[start : self.pos])


def parse(text: str, field=QQ, arity: int = 2) -> Polynomial:
    """Parse an expression like "x^2*y + 3*x - 1/2" into a Polynomial."""
    tk = _Tokens(text)
    terms = []
    sign = 1
    ch = tk.peek()
    if ch in "+-":
        sign = -1 if ch == "-" else 1
        tk.pos += 1
    terms.append(_parse_term(tk, field, arity, sign))
    while True:
        ch = tk.peek()
        if ch == "":
            break
        if ch not in "+-":
            raise ParseError(f"unexpected character {ch!r}", tk.pos)
        tk.pos += 1
        terms.append(_parse_term(tk, field, arity, -1 if ch == "-" else 1))
    return Polynomial(field, arity, terms)


def _parse_term(tk: _Tokens, field, arity, sign):
    ch = tk.peek()
    if ch == "":
        raise ParseError("expected a term", tk.pos)
    exps = [0] * arity
    if ch.isdigit():
        num = tk.take_nat()
        den = 1
        if tk.peek() == "/":
            tk.pos += 1
            at = tk.pos
            den = tk.take_nat()
            if den == 0:
                raise ParseError("zero denominator", at)
        coeff = field.from_pair(sign * num, den)
        while tk.peek() == "*":
            tk.pos += 1
            _parse_factor(tk, exps, arity)
    elif ch in VARS:
        coeff = field.coerce(sign)
        _parse_factor(tk, exps, arity)
        while tk.peek() == "*":
            tk.pos += 1
            _parse_factor(tk, exps, arity)
    else:
        raise ParseError(f"unexpected character {ch!r}", tk.pos)
    return tuple(exps), coeff


def _parse_factor(tk: _Tokens, exps, arity):
    ch = tk.peek()
    if ch not in VARS:
        raise ParseError(f"expected a variable, got {ch!r}", tk.pos)
    idx = VARS.index(ch)
    if idx >= arity:
        raise ParseError(f"variable {ch!r} outside ring of arity {arity}", tk.pos)
    tk.pos += 1
    power = 1
    if tk.peek() == "^":
        tk.pos += 1
        power = tk.take_nat()
    exps[idx] += power


def parse_many(text: str, field=QQ, arity: int = 2) -> list[Polynomial]:
    """Parse a comma separated generator list."""
    parts = [p for p in text.split(",") if p.strip()]
    return [parse(p, field, arity) for p in parts]
