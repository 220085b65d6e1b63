"""Exception hierarchy.

Two families matter to callers: :class:`ValidationError` (well-formed input
that violates a domain invariant) and :class:`ParseError` (input that could
not be read at all). The CLI maps them to exit codes 1 and 2.
"""

from __future__ import annotations


class VprsError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(VprsError):
    """Input is syntactically fine but breaks a domain invariant."""

    def __init__(self, message: str, *, location: str | None = None) -> None:
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)

    def with_location(self, location: str) -> "ValidationError":
        """Prefix the message with ``location`` (idempotent on an existing one)."""
        if self.location is None:
            self.location = location
            self.args = (f"{location}: {self.args[0]}",) + self.args[1:]
        return self


class ParseError(VprsError):
    """Input document could not be parsed."""

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None) -> None:
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class EmptyUniverse(ValidationError):
    def __init__(self, **kw) -> None:
        super().__init__("universe must contain at least one element", **kw)


class DuplicateLabel(ValidationError):
    def __init__(self, label: str, **kw) -> None:
        self.label = label
        super().__init__(f"duplicate label {label!r}", **kw)


class UnknownLabel(ValidationError):
    def __init__(self, label: str, **kw) -> None:
        self.label = label
        super().__init__(f"unknown label {label!r}", **kw)


class NotDisjoint(ValidationError):
    def __init__(self, label: str, **kw) -> None:
        self.label = label
        super().__init__(f"label {label!r} appears in more than one block", **kw)


class NotCovering(ValidationError):
    def __init__(self, label: str, **kw) -> None:
        self.label = label
        super().__init__(f"label {label!r} is not in any block", **kw)


class EmptyBlock(ValidationError):
    def __init__(self, index: int, **kw) -> None:
        self.index = index
        super().__init__(f"block {index} is empty", **kw)


class ZeroDenominator(ValidationError, ZeroDivisionError):
    def __init__(self, **kw) -> None:
        super().__init__("denominator must be non-zero", **kw)


class PrecisionOutOfRange(ValidationError):
    def __init__(self, value, **kw) -> None:
        self.value = value
        super().__init__(f"precision {value} is outside [0, 1/2]", **kw)


class UniverseMismatch(ValidationError):
    def __init__(self, **kw) -> None:
        super().__init__("operands are defined over different universes", **kw)


class ChainViolation(VprsError):
    """A region family failed to be totally ordered. Always a bug."""

    def __init__(self, family: str, betas: tuple, detail: str = "") -> None:
        self.family = family
        self.betas = betas
        msg = f"{family} chain broken between beta={betas[0]} and beta={betas[1]}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class InvalidGrid(ValidationError):
    def __init__(self, reason: str, **kw) -> None:
        super().__init__(f"invalid beta grid: {reason}", **kw)


# table ingestion


class RaggedRow(ValidationError):
    def __init__(self, row: int, **kw) -> None:
        self.row = row
        super().__init__(f"row {row} does not have one cell per column", **kw)


class DuplicateObject(ValidationError):
    def __init__(self, label: str, **kw) -> None:
        self.label = label
        super().__init__(f"duplicate object id {label!r}", **kw)


class EmptyTable(ValidationError):
    def __init__(self, **kw) -> None:
        super().__init__("table has no data rows", **kw)


class UnknownAttribute(ValidationError):
    def __init__(self, name: str, **kw) -> None:
        self.name = name
        super().__init__(f"unknown attribute {name!r}", **kw)


class EmptyAttributeSet(ValidationError):
    def __init__(self, **kw) -> None:
        super().__init__("at least one attribute is required", **kw)
