"""Typed domain errors shared by every module in the package.

Each error carries a payload of named fields.  ``str(err)`` renders as
``<ErrorName> key=value ...``, which is exactly what the command line
prints on stderr before exiting with status 1.  Usage mistakes (bad
flags, malformed numbers) are not domain errors and exit with status 2.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all domain errors raised by this package."""

    def __init__(self, note: str = "", **payload):
        super().__init__(note)
        self.note = note
        self.payload = dict(payload)

    def __str__(self) -> str:
        parts = [type(self).__name__]
        parts.extend(f"{key}={value}" for key, value in self.payload.items())
        return " ".join(parts)

    def __repr__(self) -> str:
        fields = ", ".join(f"{k}={v!r}" for k, v in self.payload.items())
        if self.note:
            fields = f"{fields}, note={self.note!r}" if fields else f"note={self.note!r}"
        return f"{type(self).__name__}({fields})"


class EmptyString(DomainError):
    """A bit string argument was empty."""


class ZeroIndex(DomainError):
    """An enumeration index was below 1 (the enumeration starts at 1)."""


class NotInImage(DomainError):
    """The bit string is not an enumerated entry (it does not end in 1).

    The payload carries ``equivalent``: the index of the string with the
    trailing zeros trimmed, which denotes the same value.
    """


class OutOfRange(DomainError):
    """A value fell outside the operation's stated domain."""


class DepthZero(DomainError):
    """A bit-stream depth below 1 was requested."""


class EnumerationExhausted(DomainError):
    """An enumeration handle yielded fewer entries than the stage requires."""


class EmptySet(DomainError):
    """The checked set was empty."""


class NotEvenPositiveDistinct(DomainError):
    """Set elements must be distinct positive even integers."""


class BudgetExceeded(DomainError):
    """A growth guard tripped; raise the cap explicitly to go further."""
