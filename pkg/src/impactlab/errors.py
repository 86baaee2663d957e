"""Exception hierarchy shared by every module of the toolkit."""

from __future__ import annotations


class ImpactError(Exception):
    """Root of all library errors."""


class InvalidFunction(ImpactError, ValueError):
    """Knot data that does not describe a continuous decreasing function."""


class NonDecreasingOrdinates(InvalidFunction):
    """An ordinate increases along the knots."""


class NonMonotoneAbscissae(InvalidFunction):
    """Abscissae are not strictly increasing from 0."""


class NegativeValue(InvalidFunction):
    pass


class EmptyInput(InvalidFunction):
    pass


class OutOfDomain(ImpactError, ValueError):
    pass


class NonZeroTail(ImpactError, ValueError):
    pass


class NotLarger(ImpactError, ValueError):
    pass


class ResultNotDecreasing(ImpactError, ValueError):
    pass


class Undefined(ImpactError, ArithmeticError):
    """The requested quantity does not exist for this input."""


class InadmissibleParameter(ImpactError, ValueError):
    pass


class MixedPsiDirections(ImpactError, ValueError):
    pass


class BadInterval(ImpactError, ValueError):
    pass


class DigitOutOfRange(ImpactError, ValueError):
    pass


class BadIndex(ImpactError, ValueError):
    pass


class ZeroTotal(ImpactError, ArithmeticError):
    pass


class DomainMismatch(ImpactError, ValueError):
    pass


class IdenticalFunctions(ImpactError, ValueError):
    pass


class NotDominated(ImpactError, ValueError):
    pass


class NotStrictlyDecreasing(ImpactError, ValueError):
    pass


class ConstructionFailed(ImpactError, RuntimeError):
    pass


class BadExponent(ImpactError, ValueError):
    pass


class ZeroMean(ImpactError, ArithmeticError):
    pass


class NotDominatedPair(ImpactError, ValueError):
    pass


class InapplicableAxiom(ImpactError, ValueError):
    pass


class BadWindow(ImpactError, ValueError):
    pass


class DeltaTooLarge(ImpactError, ValueError):
    pass


class BadDelta(ImpactError, ValueError):
    pass


class ParseError(ImpactError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class EmptyDataset(ImpactError, ValueError):
    pass
