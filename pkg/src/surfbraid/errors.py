"""Exception types shared across the package.

Everything raised on bad mathematical input derives from DomainError so
the command line front end can map it to a single exit code.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Base class for errors caused by invalid mathematical input."""


class GroupMismatchError(DomainError):
    """Operands belong to different groups."""


class UnsupportedSurfaceError(DomainError):
    """The requested computation is not defined for this surface/strand count."""


class WordSyntaxError(DomainError):
    """A braid word string does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class GeneratorIndexError(DomainError):
    """A generator index in a braid word is out of range."""


class NotSingleCycleError(DomainError):
    """The permutation part is not a single cycle (with fixed points allowed)."""


class NotDivisibleError(DomainError):
    """The exponent is not a multiple of the cycle length."""


class InfiniteOrderError(DomainError):
    """The element has infinite order where finite order is required."""


class NotAnSnEmbeddingError(DomainError):
    """The supplied images do not define a symmetric-group copy."""


class BadPrimeError(DomainError):
    """The prime parameter is not an odd prime >= 5."""


class BadMultiplierError(DomainError):
    """The multiplier does not have multiplicative order (p-1)/2 modulo p."""


class NotProductOfCyclotomicsError(DomainError):
    """The polynomial is not a product of cyclotomic polynomials."""
