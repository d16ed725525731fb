"""Exception types shared across the library."""


class PolypellError(Exception):
    """Base class for all library errors."""


class DivisionByZeroPoly(PolypellError):
    pass


class ZeroPolynomial(PolypellError):
    pass


class OddDegree(PolypellError):
    pass


class DegreeTooSmall(PolypellError):
    pass


class LeadingCoefficientNotASquare(PolypellError):
    pass


class NotSquarefree(PolypellError):
    pass


class DegreeTooLarge(PolypellError):
    pass


class ZeroFunction(PolypellError):
    pass


class UnsupportedSupport(PolypellError):
    pass


class InternalVerificationFailure(PolypellError):
    """A certificate failed its independent re-verification; indicates a bug."""


class NonSplitTarget(PolypellError):
    pass


class NotASolution(PolypellError):
    pass


class TrivialSolution(PolypellError):
    pass


class NotARelation(PolypellError):
    pass


class ParityViolation(PolypellError):
    pass


class BudgetExceeded(PolypellError):
    pass


class ParseError(PolypellError):
    def __init__(self, message, position, expected=()):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.expected = tuple(expected)
