"""Monomial orders as sort keys.

Every order maps an exponent tuple to a key tuple such that the natural
tuple comparison realizes the order.  Keys are linear in the exponents, so
multiplying a monomial shifts its key by a constant vector; the Groebner
engine exploits this to avoid recomputing keys inside merges.  Divisibility
and total degree are also answered directly on keys.
"""

from __future__ import annotations

LT, EQ, GT = -1, 0, 1


def _grev_key(exps):
    # deg first, then reversed negated exponents: the last variable breaks
    # ties downward, which is exactly graded reverse lexicographic order.
    return (sum(exps),) + tuple(-e for e in reversed(exps))


def _grev_exps(key):
    return tuple(-v for v in reversed(key[1:]))


class GrevLex:
    """Graded reverse lexicographic order, arity agnostic."""

    name = "grevlex"

    def key(self, exps):
        return _grev_key(exps)

    def exps_of_key(self, key):
        return _grev_exps(key)

    def deg_of_key(self, key):
        return key[0]

    def key_divides(self, ka, kb):
        """Does the monomial with key ka divide the one with key kb?"""
        for a, b in zip(ka[1:], kb[1:]):
            if a < b:
                return False
        return True

    def __repr__(self):
        return "grevlex"


class Lex:
    """Lexicographic order with the variables in declaration order."""

    name = "lex"

    def key(self, exps):
        return tuple(exps)

    def exps_of_key(self, key):
        return tuple(key)

    def deg_of_key(self, key):
        return sum(key)

    def key_divides(self, ka, kb):
        for a, b in zip(ka, kb):
            if a > b:
                return False
        return True

    def __repr__(self):
        return "lex"


class Elimination:
    """Block order eliminating the last k variables.

    The trailing variables are the auxiliaries here (t for intersections, u
    for spares), so the eliminated block sits at the end of the exponent
    vector.  Both blocks are compared by grevlex, the auxiliary block first,
    so any monomial involving an auxiliary dominates every monomial free of
    them, and a basis element whose leading term avoids the block avoids it
    entirely.
    """

    name = "elim"

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("elimination block must contain at least one variable")
        self.k = k

    def key(self, exps):
        k = self.k
        return _grev_key(exps[-k:]) + _grev_key(exps[:-k])

    def exps_of_key(self, key):
        k = self.k
        return _grev_exps(key[k + 1 :]) + _grev_exps(key[: k + 1])

    def deg_of_key(self, key):
        return key[0] + key[self.k + 1]

    def key_divides(self, ka, kb):
        k = self.k
        for a, b in zip(ka[1 : k + 1], kb[1 : k + 1]):
            if a < b:
                return False
        for a, b in zip(ka[k + 2 :], kb[k + 2 :]):
            if a < b:
                return False
        return True

    def __repr__(self):
        return f"elim({self.k})"


GREVLEX = GrevLex()
LEX = Lex()


def compare(e1, e2, order=GREVLEX) -> int:
    """Three way comparison of exponent tuples under the given order."""
    k1, k2 = order.key(e1), order.key(e2)
    if k1 < k2:
        return LT
    if k1 > k2:
        return GT
    return EQ


def order_by_name(name: str):
    low = name.lower()
    if low == "grevlex":
        return GREVLEX
    if low == "lex":
        return LEX
    if low.startswith("elim:"):
        return Elimination(int(low[5:]))
    raise ValueError(f"unknown monomial order {name!r}")
