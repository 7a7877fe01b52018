"""Exact number kernel: rationals, unit-interval dyadics, certified log2
enclosures, and symbolic power-tower magnitudes.

Everything in this module is exact.  Unbounded naturals and integers are
Python ``int``; rationals are ``fractions.Fraction``, which already keeps
the canonical form this package relies on (lowest terms, positive
denominator).  No code path here ever touches a float.

The hand-built types are the ones no stdlib type covers:

* ``DyadicRational``: canonical ``m / 2**k`` with odd numerator, restricted
  to (0, 1], the value domain of the binary-string enumeration;
* ``RationalInterval``: closed interval with exact rational endpoints;
* ``log2_interval``: a certified dyadic enclosure of log2(n), computed by
  interval squaring with outward rounding, exact width ``2**-p``;
* ``Magnitude``: an exact natural or a symbolic tower ``base ** exponent``
  for quantities such as 2**(2**720) that must be ordered without ever
  being written out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .errors import EmptyString, OutOfRange

Rational = Fraction

__all__ = [
    "Rational",
    "rat_add",
    "rat_mul",
    "rat_cmp",
    "DyadicRational",
    "dyadic_from_string",
    "RationalInterval",
    "log2_interval",
    "Magnitude",
    "Exact",
    "Tower",
    "Reciprocal",
    "DEFAULT_DIGIT_BUDGET",
    "canonicalize",
    "magnitude_cmp",
    "render_magnitude",
    "render_reciprocal",
    "decimal_string",
    "decimal_digit",
    "pinned_decimals",
]


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


# ---------------------------------------------------------------------------
# rationals


def rat_add(a: Rational, b: Rational) -> Rational:
    """Exact sum; the result is in lowest terms like every Fraction."""
    return a + b


def rat_mul(a: Rational, b: Rational) -> Rational:
    """Exact product in lowest terms."""
    return a * b


def rat_cmp(a: Rational, b: Rational) -> int:
    """Three-way order: -1, 0 or +1.  Total on exact rationals."""
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


# ---------------------------------------------------------------------------
# dyadic rationals in (0, 1]


class DyadicRational:
    """Canonical ``numerator / 2**exponent`` with odd numerator, in (0, 1].

    Trailing factors of two are stripped on construction, so equal values
    are structurally equal.  The exceptional point 1 is represented as
    ``1 / 2**0``; everything else lies strictly inside the unit interval.
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int, exponent: int):
        if numerator <= 0:
            raise OutOfRange(value=f"{numerator}/2^{exponent}")
        while numerator % 2 == 0:  # strip to the odd canonical form
            numerator //= 2
            exponent -= 1
        if exponent < 0 or numerator > (1 << exponent):
            raise OutOfRange(value=f"{numerator}/2^{exponent}")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicRational is immutable")

    @classmethod
    def from_fraction(cls, value: Rational) -> "DyadicRational":
        """Build from an exact rational; the denominator must be a power of 2."""
        den = value.denominator
        if den & (den - 1):
            raise OutOfRange(value=str(value), denominator=den)
        return cls(value.numerator, den.bit_length() - 1)

    @property
    def value(self) -> Rational:
        return Fraction(self.numerator, 1 << self.exponent)

    def bits(self) -> str:
        """Terminating binary expansion after the point (values < 1 only)."""
        if self.exponent == 0:
            raise OutOfRange(value="1", note="1 has no fractional expansion")
        return format(self.numerator, f"0{self.exponent}b")

    def __eq__(self, other) -> bool:
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __lt__(self, other: "DyadicRational") -> bool:
        return self.value < other.value

    def __hash__(self):
        return hash((self.numerator, self.exponent))

    def __str__(self) -> str:
        return f"{self.numerator}/{1 << self.exponent}" if self.exponent else "1"

    def __repr__(self) -> str:
        return f"DyadicRational({self.numerator}, {self.exponent})"


def dyadic_from_string(bits: str) -> DyadicRational:
    """Value of a finite bit string read as a binary fraction.

    Bit i (1-based, left to right) contributes ``2**-i``; the empty string
    is rejected rather than mapped to 0.
    """
    if not bits:
        raise EmptyString()
    if set(bits) - {"0", "1"}:
        raise ValueError(f"not a bit string: {bits!r}")
    if "1" not in bits:
        raise OutOfRange(value=bits, note="all-zero strings denote 0, outside (0, 1]")
    return DyadicRational(int(bits, 2), len(bits))


# ---------------------------------------------------------------------------
# rational intervals and certified log2


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Rational
    hi: Rational

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Rational) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def strictly_encloses(self, other: "RationalInterval") -> bool:
        return self.lo < other.lo and other.hi < self.hi

    def render(self) -> str:
        if self.is_point:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"


def log2_interval(n: int, precision_bits: int = 32) -> RationalInterval:
    """Certified enclosure of log2(n) with width exactly ``2**-precision_bits``.

    Exact powers of two give a point interval.  Otherwise the fractional
    bits of log2(n) are extracted one at a time by squaring a dyadic
    enclosure of the normalized mantissa, rounding outward at a guard
    precision of ``4p + 64`` bits; if rounding ever blurs a bit decision
    the whole computation restarts with twice the guard.  Integer
    arithmetic throughout.
    """
    if n < 1:
        raise ValueError("log2 needs n >= 1")
    if precision_bits < 1:
        raise ValueError("precision must be at least one bit")
    k = n.bit_length() - 1
    if n == 1 << k:
        point = Fraction(k)
        return RationalInterval(point, point)
    p = precision_bits
    guard = 4 * p + 64
    while True:
        # enclosure of the mantissa n / 2**k in [1, 2), scaled by 2**guard
        if guard >= k:
            lo = hi = n << (guard - k)
        else:
            lo = n >> (k - guard)
            hi = lo + 1
        frac = 0
        blurred = False
        for _ in range(p):
            lo = (lo * lo) >> guard
            hi = -((-(hi * hi)) >> guard)  # round up
            threshold = 1 << (guard + 1)
            if hi < threshold:
                frac = frac * 2
            elif lo >= threshold:
                frac = frac * 2 + 1
                lo >>= 1
                hi = -((-hi) >> 1)
            else:
                blurred = True
                break
        if not blurred:
            low = Fraction(k * (1 << p) + frac, 1 << p)
            return RationalInterval(low, low + Fraction(1, 1 << p))
        guard *= 2


# ---------------------------------------------------------------------------
# magnitudes: exact naturals and symbolic power towers


class Magnitude:
    """Marker base class; instances are Exact or Tower."""

    __slots__ = ()


@dataclass(frozen=True)
class Exact(Magnitude):
    """A natural number held in full."""

    value: int


@dataclass(frozen=True)
class Tower(Magnitude):
    """Symbolic ``base ** exponent`` with a natural base >= 2."""

    base: int
    exponent: Magnitude


DEFAULT_DIGIT_BUDGET = 10_000


@lru_cache(maxsize=None)
def _limit(digit_budget: int) -> int:
    return 10 ** digit_budget


def _pow_vs_limit(base: int, exp: int, limit: int) -> Optional[int]:
    """``base**exp`` if it is < limit, else None.  Never builds huge values:
    a bit-length sandwich filters the clear cases and only the narrow gray
    zone (result within 2x of the limit's size) is computed exactly."""
    bl = base.bit_length()
    if (bl - 1) * exp >= limit.bit_length():
        return None
    if bl * exp < limit.bit_length():
        return base ** exp
    value = base ** exp
    return value if value < limit else None


def canonicalize(m: Magnitude, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> Magnitude:
    """Canonical form: a power is written out if and only if its value has
    at most ``digit_budget`` decimal digits; degenerate towers collapse.

    Invariant used by the comparator: every canonical Tower denotes a value
    of more than ``digit_budget`` digits.
    """
    if isinstance(m, Exact):
        if m.value < 0:
            raise ValueError("magnitudes are naturals")
        return m
    if not isinstance(m, Tower):
        raise TypeError(f"not a magnitude: {m!r}")
    exp = canonicalize(m.exponent, digit_budget)
    if m.base == 0:
        return Exact(1) if exp == Exact(0) else Exact(0)
    if m.base == 1:
        return Exact(1)
    if m.base < 0:
        raise ValueError("magnitudes are naturals")
    if exp == Exact(0):
        return Exact(1)
    if exp == Exact(1):
        return Exact(m.base)
    if isinstance(exp, Exact):
        value = _pow_vs_limit(m.base, exp.value, _limit(digit_budget))
        if value is not None:
            return Exact(value)
    return Tower(m.base, exp)


def _iroot(n: int, k: int) -> int:
    """Largest r with r**k <= n (n >= 0, k >= 1).  Integer Newton from above."""
    if k == 1 or n < 2:
        return n
    if k >= n.bit_length():
        return 1
    r = 1 << -(-n.bit_length() // k)  # guaranteed >= the true root
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            return r
        r = s


def _primitive_base(b: int) -> tuple[int, int]:
    """Write b >= 2 as c**k with k maximal; c is then not a perfect power."""
    for j in range(b.bit_length(), 1, -1):
        r = _iroot(b, j)
        if r ** j == b:
            return r, j
    return b, 1


def _cmp_tower_int(t: Tower, n: int, digit_budget: int) -> int:
    """Sign of (value of canonical tower t) - n."""
    if n < 2:
        return 1
    if isinstance(t.exponent, Exact):
        bl = t.base.bit_length()
        e = t.exponent.value
        if (bl - 1) * e >= n.bit_length():
            return 1
        if bl * e < n.bit_length():
            return -1
        # gray zone: t has at most ~2x n's bits, safe to materialize
        return _sign(t.base ** e - n)
    # canonical sub-tower exponent: value(exponent) > 10**budget, so
    # t >= 2**(10**budget); any int that fits in that many bits loses
    if n.bit_length() <= _limit(digit_budget):
        return 1
    raise ValueError("comparison would exceed the digit budget")


def _cmp_scaled(k1: int, e1: Magnitude, k2: int, e2: Magnitude,
                digit_budget: int) -> int:
    """Sign of k1*value(e1) - k2*value(e2) for positive int scales."""
    if isinstance(e1, Exact) and isinstance(e2, Exact):
        return _sign(k1 * e1.value - k2 * e2.value)
    if e1 == e2:
        return _sign(k1 - k2)
    if isinstance(e1, Exact):
        return -_cmp_scaled(k2, e2, k1, e1, digit_budget)
    if isinstance(e2, Exact):
        # k1*V1 vs m: compare V1 against m // k1 and settle by remainder
        m = k2 * e2.value
        q, r = divmod(m, k1)
        c = _cmp_tower_int(e1, q, digit_budget)
        if c > 0:
            return 1
        if c < 0:
            return -1
        return _sign(0 - r)
    c = magnitude_cmp(e1, e2, digit_budget)
    if c == 0:
        return _sign(k1 - k2)
    if c > 0 and k1 >= k2:
        return 1
    if c < 0 and k1 <= k2:
        return -1
    raise ValueError("comparison would exceed the digit budget")


def _cmp_pow_pow(c1: int, m1: int, c2: int, m2: int) -> int:
    """Order c1**m1 vs c2**m2 for distinct primitive bases (so never equal),
    by refining certified log2 enclosures until they separate."""
    bl1, bl2 = c1.bit_length(), c2.bit_length()
    if (bl1 - 1) * m1 >= bl2 * m2:
        return 1
    if (bl2 - 1) * m2 >= bl1 * m1:
        return -1
    precision = 32
    while precision <= (1 << 20):
        i1 = log2_interval(c1, precision)
        i2 = log2_interval(c2, precision)
        if i1.lo * m1 > i2.hi * m2:
            return 1
        if i1.hi * m1 < i2.lo * m2:
            return -1
        precision *= 2
    raise ValueError("log2 refinement failed to separate the towers")


def _cmp_tower_tower(s: Tower, t: Tower, digit_budget: int) -> int:
    if s.exponent == t.exponent:
        return _sign(s.base - t.base)
    c1, k1 = _primitive_base(s.base)
    c2, k2 = _primitive_base(t.base)
    e1, e2 = s.exponent, t.exponent
    if c1 == c2:
        return _cmp_scaled(k1, e1, k2, e2, digit_budget)
    if isinstance(e1, Exact) and isinstance(e2, Exact):
        return _cmp_pow_pow(c1, k1 * e1.value, c2, k2 * e2.value)
    # distinct bases, at least one symbolic exponent: settle by the
    # 2-power sandwich 2**((bl-1)*e) <= c**e < 2**(bl*e)
    bl1, bl2 = c1.bit_length(), c2.bit_length()
    if _cmp_scaled(k1 * (bl1 - 1), e1, k2 * bl2, e2, digit_budget) >= 0:
        return 1
    if _cmp_scaled(k2 * (bl2 - 1), e2, k1 * bl1, e1, digit_budget) >= 0:
        return -1
    raise ValueError("comparison would exceed the digit budget")


def magnitude_cmp(a: Magnitude, b: Magnitude,
                  digit_budget: int = DEFAULT_DIGIT_BUDGET) -> int:
    """Three-way order on magnitudes, decided exactly and without ever
    materializing a value past the digit budget.

    Every comparison the package itself produces is decidable here.  A
    handful of adversarial cross-base pairs whose exponents both exceed
    the budget and whose bit-length sandwiches interleave raise
    ValueError rather than return a guess.
    """
    a = canonicalize(a, digit_budget)
    b = canonicalize(b, digit_budget)
    if isinstance(a, Exact) and isinstance(b, Exact):
        return _sign(a.value - b.value)
    if isinstance(a, Exact):
        return -_cmp_tower_int(b, a.value, digit_budget)
    if isinstance(b, Exact):
        return _cmp_tower_int(a, b.value, digit_budget)
    return _cmp_tower_tower(a, b, digit_budget)


def render_magnitude(m: Magnitude) -> str:
    """`Exact` prints as digits, towers as ``base^(exponent)``."""
    if isinstance(m, Exact):
        return str(m.value)
    return f"{m.base}^({render_magnitude(m.exponent)})"


@dataclass(frozen=True)
class Reciprocal:
    """Exact ``1 / denominator`` where the denominator may stay symbolic."""

    denominator: Magnitude


def render_reciprocal(r: Reciprocal) -> str:
    if r.denominator == Exact(1):
        return "1"
    return f"1/{render_magnitude(r.denominator)}"


# ---------------------------------------------------------------------------
# decimal rendering (always truncation, never rounding)


def decimal_string(value: Rational, digits: int) -> str:
    """Decimal expansion of a nonnegative rational, truncated to `digits`
    fractional places; a trailing ``...`` marks a nonzero cut remainder."""
    if value < 0:
        raise ValueError("decimal_string handles nonnegative values")
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    whole, rem = divmod(value.numerator, value.denominator)
    if digits == 0:
        return str(whole) + ("..." if rem else "")
    frac, tail = divmod(rem * 10 ** digits, value.denominator)
    text = f"{whole}.{frac:0{digits}d}"
    return text + ("..." if tail else "")


def decimal_digit(value: Rational, place: int) -> int:
    """Digit at 10**-place (place >= 1) of the truncated expansion."""
    if place < 1:
        raise ValueError("place starts at 1")
    return (value.numerator * 10 ** place // value.denominator) % 10


def pinned_decimals(interval: RationalInterval, digits: int) -> Optional[str]:
    """The first `digits` decimal places shared by every point of the
    interval, or None if the endpoints disagree that early."""
    scale = 10 ** digits
    lo_floor = interval.lo.numerator * scale // interval.lo.denominator
    hi_floor = interval.hi.numerator * scale // interval.hi.denominator
    if lo_floor != hi_floor:
        return None
    whole, frac = divmod(lo_floor, scale)
    return f"{whole}.{frac:0{digits}d}" if digits else str(whole)
