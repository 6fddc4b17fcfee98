"""Exception hierarchy.

Every failure raised by the library derives from ``DomainError`` except
``PrecisionExhausted``, which callers are expected to catch and retry with
more p-adic digits.
"""


class DomainError(ValueError):
    pass


class ZeroInput(DomainError):
    pass


class NotASquare(DomainError):
    pass


class SingularMatrix(DomainError):
    pass


class NotInSOQ(DomainError):
    pass


class ChartFailure(DomainError):
    """Iwasawa factorization attempted outside the big cell."""


class ZeroVector(DomainError):
    pass


class NotInDisc(DomainError):
    pass


class SamePoint(DomainError):
    pass


class NotLongLine(DomainError):
    pass


class NotInPerp(DomainError):
    pass


class DegenerateRadii(DomainError):
    pass


class OddPOnly(DomainError):
    pass


class OddValuationAlpha(DomainError):
    pass


class NotAdmissible(DomainError):
    pass


class ZeroDenominator(DomainError):
    pass


class ZeroCoordinate(DomainError):
    pass


class EqualBoundaryPoints(DomainError):
    pass


class SingularBasis(DomainError):
    pass


class PrecisionExhausted(ArithmeticError):
    """A p-adic approximation ran out of digits before a decision was made."""
