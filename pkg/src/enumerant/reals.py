"""Computable reals in (0, 1) as certified binary bit streams.

Every stream emits the non-terminating-style binary expansion of its
value x one bit at a time.  After d bits with numerator P (the emitted
bits read as an integer), the kind-specific integer certificate

    P/2**d  <=  x  <  (P+1)/2**d

is re-checked inline; for every non-dyadic value both inequalities are
strict at every depth, which is what entitles `approximate` to report a
certified non-membership.  Dyadic rationals follow the terminating
convention (the expansion ends in repeating 0s); the depth at which the
value meets the lower endpoint exactly is recorded in `boundary_depth`
rather than raised, and emission simply continues.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import DepthZero
from .exactnum import DyadicRational

__all__ = [
    "ComputableReal",
    "RationalStream",
    "SqrtStream",
    "EulerStream",
    "LiouvilleStream",
    "parse_real",
]


class ComputableReal:
    """Base class: bit bookkeeping, prefixes, and certificate plumbing."""

    name = "real"

    def __init__(self):
        self._bits: list[str] = []
        self._scaled = 0  # the emitted prefix as an integer
        self.boundary_depth: Optional[int] = None

    @property
    def depth(self) -> int:
        return len(self._bits)

    @property
    def scaled_prefix(self) -> int:
        return self._scaled

    def next_bit(self) -> int:
        bit = self._emit()
        self._bits.append(str(bit))
        self._scaled = self._scaled * 2 + bit
        if not self.sandwich_holds(self._scaled, self.depth):
            raise AssertionError(
                f"{self.name}: certificate failed at depth {self.depth}")
        return bit

    def prefix(self, depth: int) -> str:
        """The first `depth` bits after the point."""
        if depth < 1:
            raise DepthZero(depth=depth)
        while self.depth < depth:
            self.next_bit()
        return "".join(self._bits[:depth])

    def exact_dyadic(self) -> Optional[DyadicRational]:
        """The value as a dyadic rational, when it is one (else None)."""
        return None

    def sandwich_holds(self, scaled: int, depth: int) -> bool:
        """Exact check that the value lies in [scaled/2**d, (scaled+1)/2**d).

        Pure integer arithmetic, usable by outside verifiers on any
        recorded prefix, not just the stream's own state.
        """
        raise NotImplementedError

    def _emit(self) -> int:
        raise NotImplementedError


class RationalStream(ComputableReal):
    """Exact expansion of a rational p/q in (0, 1) by long division."""

    def __init__(self, numerator: int, denominator: int):
        super().__init__()
        value = Fraction(numerator, denominator)
        if not 0 < value < 1:
            raise ValueError("rational streams live strictly inside (0, 1)")
        self.p = value.numerator
        self.q = value.denominator
        self._rem = self.p
        self.name = f"rat:{self.p}/{self.q}"

    def _emit(self) -> int:
        doubled = self._rem * 2
        if doubled >= self.q:
            self._rem = doubled - self.q
            bit = 1
        else:
            self._rem = doubled
            bit = 0
        if self._rem == 0 and self.boundary_depth is None:
            self.boundary_depth = self.depth + 1  # value == lower endpoint here on
        return bit

    def exact_dyadic(self) -> Optional[DyadicRational]:
        if self.q & (self.q - 1):
            return None
        return DyadicRational(self.p, self.q.bit_length() - 1)

    def sandwich_holds(self, scaled: int, depth: int) -> bool:
        lhs = self.p << depth  # p * 2**d vs bounds scaled by q
        return scaled * self.q <= lhs < (scaled + 1) * self.q


class SqrtStream(ComputableReal):
    """Fractional part of sqrt(a/b) for a non-square ratio.

    Bits come from the integer square sandwich: after d bits with
    numerator P, (c*2**d + P)**2 * b < a * 4**d < (c*2**d + P + 1)**2 * b
    where c is the integer part of the root; the next bit tests the
    midpoint the same way.  Irrationality keeps every inequality strict.
    """

    def __init__(self, a: int, b: int):
        super().__init__()
        ratio = Fraction(a, b)
        if ratio <= 0:
            raise ValueError("need a positive radicand")
        self.a = ratio.numerator
        self.b = ratio.denominator
        s = isqrt(self.a * self.b)
        if s * s == self.a * self.b:  # reduced a/b is square iff a*b is
            raise ValueError("perfect-square ratio: the root is rational")
        self.root_floor = s // self.b
        self.name = f"sqrt({self.a}/{self.b})" if self.b != 1 else f"sqrt{self.a}"

    def _emit(self) -> int:
        d1 = self.depth + 1
        mid = (self.root_floor << d1) + 2 * self._scaled + 1
        return 1 if self.a * (1 << (2 * d1)) > self.b * mid * mid else 0

    def sandwich_holds(self, scaled: int, depth: int) -> bool:
        lo = (self.root_floor << depth) + scaled
        hi = lo + 1
        target = self.a * (1 << (2 * depth))
        return self.b * lo * lo < target < self.b * hi * hi


class _EnclosureStream(ComputableReal):
    """Bits from a shrinking strict rational enclosure lo < x < hi.

    Subclasses supply `_enclosure` and `_refine`; enclosures must be
    nested and their widths must tend to zero.  Each bit is decided by
    refining until the whole enclosure clears the midpoint, sound for
    any irrational value (the midpoints are dyadic).
    """

    def _enclosure(self) -> tuple[Fraction, Fraction]:
        raise NotImplementedError

    def _refine(self) -> None:
        raise NotImplementedError

    def _emit(self) -> int:
        mid = Fraction(2 * self._scaled + 1, 1 << (self.depth + 1))
        while True:
            lo, hi = self._enclosure()
            if hi <= mid:
                return 0
            if lo >= mid:
                return 1
            self._refine()

    def sandwich_holds(self, scaled: int, depth: int) -> bool:
        lo, hi = self._enclosure()
        span = 1 << depth
        return Fraction(scaled, span) <= lo and hi <= Fraction(scaled + 1, span)


class EulerStream(_EnclosureStream):
    """The fractional part of e: sum of 1/v! for v >= 2.

    After the term 1/n! the tail is strictly below 1/(n * n!), giving
    the strict enclosure (S_n, S_n + 1/(n*n!)).
    """

    name = "e"

    def __init__(self):
        super().__init__()
        self._n = 2
        self._fact = 2
        self._sum = Fraction(1, 2)

    def _enclosure(self):
        return self._sum, self._sum + Fraction(1, self._n * self._fact)

    def _refine(self):
        self._n += 1
        self._fact *= self._n
        self._sum += Fraction(1, self._fact)


class LiouvilleStream(_EnclosureStream):
    """The sum of 10**-(v!) over v >= 1: decimal 1s at 1, 2, 6, 24, ...

    The tail past the v=m term is strictly below 2 * 10**-((m+1)!).
    """

    name = "tau"

    def __init__(self):
        super().__init__()
        self._m = 1
        self._fact = 1
        self._sum = Fraction(1, 10)

    def _enclosure(self):
        next_fact = self._fact * (self._m + 1)
        return self._sum, self._sum + Fraction(2, 10 ** next_fact)

    def _refine(self):
        self._m += 1
        self._fact *= self._m
        self._sum += Fraction(1, 10 ** self._fact)


def parse_real(text: str) -> ComputableReal:
    """CLI-facing names: sqrt2, e, tau, or rat:P/Q with 0 < P/Q < 1."""
    if text == "sqrt2":
        return SqrtStream(2, 1)
    if text == "e":
        return EulerStream()
    if text == "tau":
        return LiouvilleStream()
    if text.startswith("rat:"):
        body = text[4:]
        num, sep, den = body.partition("/")
        if sep and num.isdigit() and den.isdigit() and int(den) > 0:
            return RationalStream(int(num), int(den))
        raise ValueError(f"malformed rational: {text!r}")
    raise ValueError(f"unknown real name: {text!r}")
