"""Exceptions raised by cliffdiag.

Every error derives from CliffdiagError and from the builtin exception
that fits it best, so callers can catch either one.
"""


class CliffdiagError(Exception):
    """Base class for all cliffdiag errors."""


class NotPrime(CliffdiagError, ValueError):
    """Raised when a modulus that must be prime is composite."""


class ModulusMismatch(CliffdiagError, ValueError):
    """Raised when residues from different rings are combined."""


class NotAUnit(CliffdiagError, ArithmeticError):
    """Raised when inverting a residue divisible by p."""


class CaseNotApplicable(CliffdiagError, ValueError):
    """Raised when Faulhaber's formula can't be used for the exponent."""


class DimensionMismatch(CliffdiagError, ValueError):
    """Raised when a basis vector, table or operator has the wrong shape."""


class NotInHierarchy(CliffdiagError, ValueError):
    """Raised when a phase table has a denominator that isn't a power of p.

    Such a gate lies in no level of the Clifford hierarchy, so no
    phase polynomial can represent it.
    """


class InconsistentDifference(CliffdiagError, ValueError):
    """Raised when a difference table can't be integrated around the cycle."""


class TooLarge(CliffdiagError, RuntimeError):
    """Raised when a computation would exceed its size guard."""


class UnknownGate(CliffdiagError, ValueError):
    """Raised for gate names or parameters that aren't recognized."""


class ClassifierDisagreement(CliffdiagError, AssertionError):
    """Raised when independent level classifiers return different levels.

    This never happens for a correct library.
    """


class MalformedConjugation(CliffdiagError, AssertionError):
    """Raised when a conjugated operator doesn't have the expected shape."""


class InvalidGateSpec(CliffdiagError, ValueError):
    """Raised when a gate specification is ambiguous or malformed."""
