"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GemError(ValueError):
    """Base class for all domain errors raised by gemtopo."""


class GemSyntaxError(GemError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class GemSemanticError(GemError):
    def __init__(self, kind: str, location: str):
        self.kind = kind
        self.location = location
        super().__init__(f"{kind}: {location}")


class InvalidGraph(GemError):
    """Raised when an operation needs a valid, connected graph and did not get one."""


class BadRank(GemError):
    pass


class EmptyColorSet(GemError):
    pass


class TooFewColors(GemError):
    pass


class SameColor(GemError):
    pass


class WrongRank(GemError):
    pass


class BadPairPartition(GemError):
    pass


class NoSuchLine(GemError):
    pass


class NotADipole(GemError):
    pass


class ColorMismatch(GemError):
    pass


class NotClosed(GemError):
    pass


class NotConnected(GemError):
    pass


class CurveNotOnSurface(GemError):
    pass


class SchemaError(GemError):
    pass
