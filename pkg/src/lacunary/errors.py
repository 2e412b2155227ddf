"""Exception hierarchy shared by all modules.

Everything mathematical derives from LacunaryError so callers (notably the
CLI) can separate computation failures from usage errors.
"""


class LacunaryError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(LacunaryError, ValueError):
    """Operands live in different rings or have incompatible dimensions."""


class NotInvertibleError(LacunaryError, ArithmeticError):
    """Residue has no inverse modulo the given modulus."""


class DivisibilityError(LacunaryError, ValueError):
    """A required divisibility (d | N, exact division) does not hold."""


class ParityError(LacunaryError, ValueError):
    """An even dimension was required."""


class EmptyRangeError(LacunaryError, ValueError):
    """A harmonic/Lerch summation range contains no terms (p too small)."""


class InsufficientSeedsError(LacunaryError, ValueError):
    """A recurrence was given fewer seed values than its effective order."""


class NumericConfidenceError(LacunaryError, ArithmeticError):
    """A float-path result was too far from an integer to round safely."""


class FloatRangeError(LacunaryError, OverflowError):
    """The requested value exceeds what double precision can resolve."""


class CongruenceViolationError(LacunaryError, RuntimeError):
    """A congruence that must hold unconditionally failed: a library bug."""
