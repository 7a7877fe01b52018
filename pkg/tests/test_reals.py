from fractions import Fraction

import mpmath
import pytest

from enumerant.errors import DepthZero
from enumerant.exactnum import DyadicRational
from enumerant.reals import (
    EulerStream,
    LiouvilleStream,
    RationalStream,
    SqrtStream,
    parse_real,
)
from enumerant.series import e_enclosure

# 64-bit expansions, derived from the integer certificates below and
# cross-checked against an independent high-precision library in-test
SQRT2_BITS = "0110101000001001111001100110011111110011101111001100100100001000"
EULER_BITS = "1011011111100001010100010110001010001010111011010010101001101010"
TAU_BITS = "0001110000101001000001101000100110000110111111001101111011100011"


def mp_bits(x, depth) -> str:
    """Independent oracle: first `depth` binary digits of x in (0,1)."""
    scaled = mpmath.floor(mpmath.ldexp(x, depth))
    return format(int(scaled), f"0{depth}b")


class TestRationalStream:
    def test_periodic_third(self):
        r = RationalStream(1, 3)
        assert r.prefix(12) == "010101010101"
        assert r.boundary_depth is None
        assert r.exact_dyadic() is None

    def test_period_of_one_seventh(self):
        assert RationalStream(1, 7).prefix(12) == "001001001001"

    def test_terminating_dyadic(self):
        r = RationalStream(5, 16)
        assert r.prefix(10) == "0101000000"
        assert r.boundary_depth == 4  # equals its lower endpoint from here on
        assert r.exact_dyadic() == DyadicRational(5, 4)

    def test_unreduced_input_is_normalized(self):
        r = RationalStream(2, 6)
        assert (r.p, r.q) == (1, 3)

    def test_domain(self):
        for num, den in ((0, 5), (5, 5), (7, 5), (-1, 3)):
            with pytest.raises(ValueError):
                RationalStream(num, den)

    def test_prefix_against_mpmath(self):
        mpmath.mp.prec = 200
        assert RationalStream(3, 7).prefix(100) == mp_bits(mpmath.mpf(3) / 7, 100)

    def test_deep_periodicity(self):
        r = RationalStream(1, 3)
        assert r.prefix(10_000) == "01" * 5_000


class TestSqrtStream:
    def test_sqrt2_prefix(self):
        assert SqrtStream(2, 1).prefix(64) == SQRT2_BITS

    def test_against_mpmath(self):
        mpmath.mp.prec = 300
        assert SqrtStream(2, 1).prefix(200) == mp_bits(mpmath.sqrt(2) - 1, 200)
        assert SqrtStream(5, 4).prefix(100) == mp_bits(mpmath.sqrt(mpmath.mpf(5) / 4) - 1, 100)
        assert SqrtStream(7, 3).prefix(100) == mp_bits(mpmath.sqrt(mpmath.mpf(7) / 3) - 1, 100)

    def test_perfect_squares_rejected(self):
        for a, b in ((4, 1), (9, 4), (16, 1), (1, 4)):
            with pytest.raises(ValueError):
                SqrtStream(a, b)
        with pytest.raises(ValueError):
            SqrtStream(0, 3)

    def test_integer_part_handling(self):
        # sqrt(7/3) = 1.527...: integer part 1, fraction .527...
        s = SqrtStream(7, 3)
        assert s.root_floor == 1
        assert s.prefix(1) == "1"


class TestSeriesStreams:
    def test_euler_prefix(self):
        e = EulerStream()
        assert e.prefix(64) == EULER_BITS
        assert e.prefix(3) == "101"

    def test_tau_prefix(self):
        t = LiouvilleStream()
        assert t.prefix(64) == TAU_BITS
        assert t.prefix(8) == "00011100"

    def test_against_mpmath(self):
        mpmath.mp.prec = 400
        assert EulerStream().prefix(200) == mp_bits(mpmath.e - 2, 200)
        tau = mpmath.mpf(0)
        f = 1
        for v in range(1, 8):
            f *= v
            tau += mpmath.power(10, -f)
        assert LiouvilleStream().prefix(200) == mp_bits(tau, 200)

    def test_euler_stream_agrees_with_series_enclosures(self):
        e = EulerStream()
        scaled = int(e.prefix(40), 2)
        iv = e_enclosure(30).interval
        # both brackets contain e - 2, so they must overlap
        assert Fraction(scaled, 1 << 40) < iv.hi - 2
        assert iv.lo - 2 < Fraction(scaled + 1, 1 << 40)


class TestStreamInvariants:
    KINDS = (
        lambda: RationalStream(1, 3),
        lambda: RationalStream(5, 16),
        lambda: RationalStream(355, 452),
        lambda: SqrtStream(2, 1),
        lambda: SqrtStream(5, 4),
        lambda: EulerStream(),
        lambda: LiouvilleStream(),
    )

    def test_prefix_extension_is_stable(self):
        for make in self.KINDS:
            x = make()
            head = x.prefix(10)
            assert x.prefix(40).startswith(head)
            assert x.prefix(10) == head

    def test_scaled_prefix_recurrence(self):
        for make in self.KINDS:
            x = make()
            previous = 0
            for depth in range(1, 65):
                bit = int(x.prefix(depth)[-1])
                scaled = int(x.prefix(depth), 2)
                assert scaled == 2 * previous + bit
                previous = scaled

    def test_sandwich_is_sharp_at_every_depth(self):
        # the emitted numerator is the only one the certificate accepts
        for make in self.KINDS:
            x = make()
            bits = x.prefix(64)
            for depth in range(1, 65):
                scaled = int(bits[:depth], 2)
                assert x.sandwich_holds(scaled, depth)
                assert not x.sandwich_holds(scaled + 1, depth)
                if scaled:
                    assert not x.sandwich_holds(scaled - 1, depth)

    def test_depth_errors(self):
        for make in self.KINDS:
            with pytest.raises(DepthZero):
                make().prefix(0)
            with pytest.raises(DepthZero):
                make().prefix(-3)


class TestParseReal:
    def test_names(self):
        assert isinstance(parse_real("sqrt2"), SqrtStream)
        assert isinstance(parse_real("e"), EulerStream)
        assert isinstance(parse_real("tau"), LiouvilleStream)
        r = parse_real("rat:3/8")
        assert isinstance(r, RationalStream) and (r.p, r.q) == (3, 8)

    def test_rejects_junk(self):
        for bad in ("bogus", "rat:", "rat:3", "rat:3/0", "rat:-1/3", "rat:a/b"):
            with pytest.raises(ValueError):
                parse_real(bad)
