"""Exception types shared across the package."""
from __future__ import annotations


class SkewPathError(Exception):
    """Base class for every domain error raised by skewpath."""


class InvalidPath(SkewPathError):
    def __init__(self, position: int, message: str):
        super().__init__(f"{message} at position {position}")
        self.position = position


class BelowAxis(InvalidPath):
    def __init__(self, position: int):
        super().__init__(position, "path goes below the axis")


class ForbiddenFactor(InvalidPath):
    def __init__(self, position: int):
        super().__init__(position, "forbidden factor U·Dr or Dr·U")


class BadStepSymbol(InvalidPath):
    def __init__(self, position: int, symbol: str):
        super().__init__(position, f"unknown step symbol {symbol!r}")
        self.symbol = symbol


class LimitExceeded(SkewPathError):
    pass


class SeriesError(SkewPathError, ArithmeticError):
    pass


class NonUnitConstantTerm(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


class NonzeroInnerConstant(SeriesError):
    pass


class IntegralityViolation(SeriesError):
    pass


class DivisibilityViolation(SeriesError):
    pass


class OEISError(SkewPathError):
    pass


class MalformedId(OEISError):
    pass


class NotFound(OEISError):
    pass


class NetworkUnavailable(OEISError):
    pass


class ParseError(OEISError):
    pass
