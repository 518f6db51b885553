"""Exception types shared across the package."""


class CycmdsError(Exception):
    """Base class for all library errors."""


class NotCoprime(CycmdsError):
    """Arguments were required to be coprime but are not."""


class PrimalityBoundExceeded(CycmdsError):
    """Input exceeds the range where the primality test is deterministic."""


class FactorizationIncomplete(CycmdsError):
    """Factorization aborted within its budget; carries the partial result.

    Attributes:
        value: the original integer.
        partial: list of (prime, exponent) pairs found so far.
        cofactor: the remaining unfactored (or uncertifiable) part.
    """

    def __init__(self, value, partial, cofactor, reason=""):
        self.value = value
        self.partial = list(partial)
        self.cofactor = cofactor
        msg = f"factorization of {value} incomplete: cofactor {cofactor} left"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class ConductorMismatch(CycmdsError):
    """Binary operation on cyclotomic values with different conductors."""


class InvalidSpec(CycmdsError):
    """Malformed code parameters (length / defining set)."""


class NotSquare(CycmdsError):
    """Determinant of a non-square matrix requested."""


class NotInCyclicGroup(CycmdsError):
    """Matrix entry is not a power of the designated root of unity."""


class BudgetExceeded(CycmdsError):
    """A configured enumeration or search budget would be exceeded."""


class MinorBudgetExceeded(BudgetExceeded):
    """Number of maximal minors exceeds the configured cap."""


class Ramified(CycmdsError):
    """Field construction requested at a prime dividing the conductor."""


class ZeroMinorPresent(CycmdsError):
    """The characteristic-zero matrix has a vanishing maximal minor."""


class BadPrime(CycmdsError):
    """Reduction requested at a prime excluded by the certificate set."""


class RankDeficient(CycmdsError):
    """Generator matrix has rank below its row count."""


class NotMds(CycmdsError):
    """Classification requested for a code that is not MDS."""


class PreconditionViolated(CycmdsError):
    """Construction parameters violate a stated precondition."""


class InternalConsistencyError(CycmdsError):
    """A certified guarantee failed to hold; indicates a bug, not bad input."""
