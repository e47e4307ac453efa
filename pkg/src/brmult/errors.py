"""Exception taxonomy shared across the package.

Computation errors deliberately carry enough state to be reported in CLI
output: the failing values, the truncation level, the trial count.  Input
errors (bad syntax, arity mismatches) raise plain ValueError subclasses.
"""


class BrmultError(Exception):
    """Base class for all computational failures."""


class ParseError(ValueError):
    """Syntax error in a polynomial expression.  Carries a byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ArityMismatch(ValueError):
    """Operands live in rings with different numbers of variables."""


class FieldMismatch(ValueError):
    """Operands have coefficients in different fields."""


class DegreeCapExceeded(BrmultError):
    """A polynomial exceeded the supported total degree bound."""


class NonFiniteColength(BrmultError):
    """A length computation failed to stabilize: the quotient is not finite
    at the origin."""


class NotMPrimary(BrmultError):
    """An operation required an ideal primary to the maximal ideal."""


class NoStabilization(BrmultError):
    """A finite-difference scheme ran out of its power cap before its
    differences settled."""


class GenericityFailure(BrmultError):
    """Randomly sampled elements failed a certification check in every
    allowed trial.  Carries the per-trial values when known."""

    def __init__(self, message, trials=None):
        super().__init__(message)
        self.trials = trials


class InvolutionFailure(BrmultError):
    """Linking twice did not return the original ideal."""


class ChainCapExceeded(BrmultError):
    """A linkage chain exceeded the iteration cap without terminating."""


class NotIntegrallyClosed(BrmultError):
    """An operation required an integrally closed ideal."""


class DegenerateInstance(BrmultError):
    """A classification point sits exactly on a deciding boundary."""


class AreaMismatch(BrmultError):
    """Neither triangle-area correction reproduced the sampled module
    multiplicity.  Carries the gap e(J) - e(I) - br and both candidate
    values."""

    def __init__(self, message, delta=None, candidates=None):
        super().__init__(message)
        self.delta = delta
        self.candidates = candidates


class SizeCapExceeded(BrmultError):
    """An input exceeded a documented size cap (rank, power, truncation)."""


class VerificationError(BrmultError):
    """Two routes that must agree did not.  Carries both values."""

    def __init__(self, message, expected=None, actual=None):
        super().__init__(message)
        self.expected = expected
        self.actual = actual
