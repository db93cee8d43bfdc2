"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class LieFacesError(Exception):
    """Base class for every error raised by liefaces."""


class InvalidGenerator(LieFacesError, ValueError):
    def __init__(self, index: int, degree: int, height: int, line: int | None = None):
        self.index = index
        self.degree = degree
        self.height = height
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(
            f"{where}generator #{index} has degree={degree} height={height}; both must be >= 1"
        )


class EmptyPresentation(LieFacesError, ValueError):
    pass


class ParityError(LieFacesError, ValueError):
    pass


class RankError(LieFacesError, ValueError):
    pass


class DomainError(LieFacesError, ValueError):
    pass


class DimensionMismatch(LieFacesError, ValueError):
    pass


class UnknownGroup(LieFacesError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown group"


class UnknownField(LieFacesError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown field"


class MissingParameter(LieFacesError, ValueError):
    pass


class ParseError(LieFacesError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DuplicateKey(ParseError):
    pass
