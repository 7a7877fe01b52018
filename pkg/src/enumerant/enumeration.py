"""Breadth-first enumeration of all finite binary strings.

Entry n (n >= 1) is the binary expansion of n written in reverse, so the
2**(k-1) strings of length k occupy the index block [2**(k-1), 2**k) in
lexicographic-by-construction order, and every enumerated string ends in
a 1 bit.  Read as binary fractions (bit i after the point contributing
2**-i), the entries are exactly the odd-numerator dyadic rationals in
(0, 1), each appearing at exactly one index.

`approximate` runs the enumeration against a certified real bit stream:
dyadic targets get their exact index, everything else gets a refutation
plus the nearest enumerated value at the requested depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, TYPE_CHECKING

from .errors import DepthZero, EmptyString, NotInImage, ZeroIndex
from .exactnum import DyadicRational, dyadic_from_string

if TYPE_CHECKING:  # pragma: no cover
    from .reals import ComputableReal

__all__ = [
    "index_to_string",
    "index_to_string_recursive",
    "string_to_index",
    "ColumnPosition",
    "column_of",
    "column_index",
    "column_entries",
    "Entry",
    "entries",
    "all_strings",
    "locate_value",
    "ApproximationReport",
    "approximate",
]


def _check_bits(bits: str) -> None:
    if not bits:
        raise EmptyString()
    if set(bits) - {"0", "1"}:
        raise ValueError(f"not a bit string: {bits!r}")


def index_to_string(n: int) -> str:
    """The n-th enumerated string: binary digits of n, reversed."""
    if n < 1:
        raise ZeroIndex(index=n)
    return format(n, "b")[::-1]


def index_to_string_recursive(n: int) -> str:
    """Same map built the way the table grows: length-k strings are the
    length-(k-1) strings each extended by a leading 0 and a leading 1.

    Kept deliberately independent of `index_to_string`; the two are
    compared exhaustively in the tests.
    """
    if n < 1:
        raise ZeroIndex(index=n)
    k = n.bit_length()
    if k == 1:
        return "1"
    j = n - (1 << (k - 1))  # 0-based offset within the length-k block
    prefix = "1" if j & 1 else "0"
    return prefix + index_to_string_recursive((1 << (k - 2)) + (j >> 1))


def string_to_index(bits: str) -> int:
    """Inverse of `index_to_string`.

    Only strings ending in 1 are enumerated.  A string with trailing
    zeros denotes the same value as its trimmed form, so the error
    carries the index of that equivalent entry.
    """
    _check_bits(bits)
    if bits.endswith("0"):
        trimmed = bits.rstrip("0")
        if not trimmed:
            raise NotInImage(value=bits)
        raise NotInImage(
            "trailing zeros do not change the denoted value",
            equivalent=int(trimmed[::-1], 2),
        )
    return int(bits[::-1], 2)


class ColumnPosition(NamedTuple):
    column: int
    position: int  # 1-based within the column


def column_of(n: int) -> ColumnPosition:
    """Which length block holds index n, and where in it."""
    if n < 1:
        raise ZeroIndex(index=n)
    k = n.bit_length()
    return ColumnPosition(k, n - (1 << (k - 1)) + 1)


def column_index(column: int, position: int) -> int:
    """Inverse of `column_of`."""
    if column < 1 or not 1 <= position <= (1 << (column - 1)):
        raise ZeroIndex(column=column, position=position)
    return (1 << (column - 1)) + position - 1


def column_entries(column: int) -> Iterator[str]:
    """All length-`column` entries, in enumeration order."""
    if column < 1:
        raise ZeroIndex(column=column)
    for n in range(1 << (column - 1), 1 << column):
        yield index_to_string(n)


class Entry(NamedTuple):
    index: int
    bits: str
    value: DyadicRational


def entries(count: int) -> Iterator[Entry]:
    """The first `count` entries with their dyadic values."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    for n in range(1, count + 1):
        bits = index_to_string(n)
        yield Entry(n, bits, dyadic_from_string(bits))


def all_strings() -> Iterator[str]:
    """Endless iterator over the whole enumeration (index 1, 2, ...)."""
    n = 1
    while True:
        yield index_to_string(n)
        n += 1


def locate_value(value: DyadicRational) -> int:
    """Index of the entry denoting `value`; the domain is (0, 1) dyadics."""
    return string_to_index(value.bits())  # value 1 is rejected by bits()


@dataclass(frozen=True)
class ApproximationReport:
    """Outcome of hunting a real number through the enumeration.

    `verdict` is "exact-member" when the target is a dyadic rational in
    (0, 1) (then `member_index` is its index), else "no-finite-index"
    with a `reason`.  In both cases `best_*` give the enumerated value
    nearest the target at the examined depth, with a proven error bound.
    """

    target: str
    depth: int
    prefix: str
    verdict: str
    member_index: Optional[int]
    reason: Optional[str]
    best_index: int
    best_bits: str
    best_value: DyadicRational
    error_bound: Fraction


def approximate(x: "ComputableReal", depth: int) -> ApproximationReport:
    """Search the enumeration for a real x in (0, 1) to a given depth.

    The depth-d prefix of x's certified bit stream pins x inside a
    half-open dyadic interval of width 2**-d; one extra bit picks the
    nearer endpoint as the best enumerated approximation.
    """
    if depth < 1:
        raise DepthZero(depth=depth)
    prefix = x.prefix(depth)
    scaled = int(prefix, 2)
    exact = x.exact_dyadic()
    if exact is not None:
        index = locate_value(exact)
        return ApproximationReport(
            target=x.name,
            depth=depth,
            prefix=prefix,
            verdict="exact-member",
            member_index=index,
            reason=None,
            best_index=index,
            best_bits=index_to_string(index),
            best_value=exact,
            error_bound=Fraction(0),
        )
    top = 1 << depth
    if scaled == 0:
        best = DyadicRational(1, depth)  # upper endpoint; 0 is not enumerated
        bound = Fraction(1, top)
    elif scaled == top - 1:
        best = DyadicRational(scaled, depth)  # upper endpoint would be 1
        bound = Fraction(1, top)
    else:
        lower_half = int(x.prefix(depth + 1), 2) == 2 * scaled
        best = DyadicRational(scaled if lower_half else scaled + 1, depth)
        bound = Fraction(1, 2 * top)
    index = locate_value(best)
    reason = (
        "every enumerated entry is a terminating binary fraction; "
        f"the target is certified distinct from every dyadic of exponent <= {depth}"
    )
    return ApproximationReport(
        target=x.name,
        depth=depth,
        prefix=prefix,
        verdict="no-finite-index",
        member_index=None,
        reason=reason,
        best_index=index,
        best_bits=index_to_string(index),
        best_value=best,
        error_bound=bound,
    )
