from fractions import Fraction
from math import factorial

import mpmath
import pytest

from enumerant.errors import BudgetExceeded
from enumerant.exactnum import decimal_digit, decimal_string, pinned_decimals
from enumerant.series import (
    e_enclosure,
    geometric_partial,
    harmonic_partial,
    liouville_partial,
    oresme_block,
)


class TestOresmeBlocks:
    def test_frozen_first_blocks(self):
        # 1/2; 1/3+1/4; 1/5+...+1/8, summed by hand
        assert oresme_block(1).total == Fraction(1, 2)
        assert oresme_block(2).total == Fraction(7, 12)
        assert oresme_block(3).total == Fraction(533, 840)

    def test_block_boundaries(self):
        b = oresme_block(4)
        assert (b.first, b.last, b.terms) == (9, 16, 8)

    def test_every_block_is_at_least_a_half(self):
        for k in range(1, 15):
            block = oresme_block(k)
            assert block.at_least_half
            # and under 1: each of the 2**(k-1) terms is at most 1/(2**(k-1)+1)
            assert block.total < 1

    def test_blocks_partition_the_harmonic_sum(self):
        total = Fraction(1)
        for k in range(1, 9):
            total += oresme_block(k).total
        assert total == harmonic_partial(256)

    def test_domain(self):
        with pytest.raises(ValueError):
            oresme_block(0)


class TestHarmonic:
    def test_frozen_values(self):
        assert harmonic_partial(1) == 1
        assert harmonic_partial(2) == Fraction(3, 2)
        assert harmonic_partial(3) == Fraction(11, 6)
        assert harmonic_partial(4) == Fraction(25, 12)

    def test_doubling_bound(self):
        for k in range(0, 11):
            assert harmonic_partial(1 << k) >= 1 + Fraction(k, 2)

    def test_fold_and_tree_agree_across_the_threshold(self):
        for n in (1, 2, 37, 256, 1000):
            assert harmonic_partial(n, naive_threshold=4) == harmonic_partial(n)

    def test_domain(self):
        with pytest.raises(ValueError):
            harmonic_partial(0)


class TestGeometric:
    def test_frozen_values(self):
        assert geometric_partial(1) == Fraction(1, 2)
        assert geometric_partial(2) == Fraction(3, 4)
        assert geometric_partial(10) == Fraction(1023, 1024)

    def test_matches_closed_form_up_to_a_thousand(self):
        for n in range(1, 1001):
            assert geometric_partial(n) == 1 - Fraction(1, 1 << n)

    def test_domain(self):
        with pytest.raises(ValueError):
            geometric_partial(0)


class TestEulerEnclosures:
    def test_first_two(self):
        assert e_enclosure(1).interval.lo == 2
        assert e_enclosure(1).interval.hi == 3
        assert e_enclosure(2).interval.lo == Fraction(5, 2)
        assert e_enclosure(2).interval.hi == Fraction(11, 4)

    def test_nesting_and_shrinking(self):
        previous = e_enclosure(1).interval
        for n in range(2, 51):
            current = e_enclosure(n).interval
            assert previous.strictly_encloses(current)
            assert current.width < previous.width
            previous = current

    def test_width_at_twenty_five_terms(self):
        assert e_enclosure(25).interval.width < Fraction(1, 10 ** 26)

    def test_twenty_pinned_decimals(self):
        pinned = pinned_decimals(e_enclosure(25).interval, 20)
        assert pinned == "2.71828182845904523536"
        assert pinned == pinned_decimals(e_enclosure(30).interval, 20)

    def test_against_mpmath(self):
        mpmath.mp.dps = 60
        iv = e_enclosure(40).interval
        lo = mpmath.mpf(iv.lo.numerator) / iv.lo.denominator
        hi = mpmath.mpf(iv.hi.numerator) / iv.hi.denominator
        assert lo < mpmath.e < hi

    def test_domain(self):
        with pytest.raises(ValueError):
            e_enclosure(0)


class TestLiouvillePartials:
    def test_frozen_values(self):
        assert liouville_partial(1).value == Fraction(1, 10)
        assert liouville_partial(2).value == Fraction(11, 100)
        assert liouville_partial(3).value == Fraction(110001, 10 ** 6)

    def test_one_places(self):
        assert liouville_partial(4).one_places == (1, 2, 6, 24)

    def test_digits_are_ones_exactly_at_factorial_places(self):
        for m in range(1, 7):
            part = liouville_partial(m)
            places = set(part.one_places)
            last = factorial(m)
            text = decimal_string(part.value, last)
            assert not text.endswith("...")
            digits = text.split(".")[1]
            for p in range(1, last + 1):
                assert int(digits[p - 1]) == (1 if p in places else 0)

    def test_tail_bound_brackets_the_next_partial(self):
        for m in range(1, 6):
            part = liouville_partial(m)
            richer = liouville_partial(m + 1, cap=None)
            assert part.value < richer.value < part.value + part.tail_bound

    def test_growth_guard(self):
        with pytest.raises(BudgetExceeded):
            liouville_partial(8)
        assert liouville_partial(8, cap=None).one_places[-1] == 40320
        assert liouville_partial(8, cap=8).m == 8

    def test_digit_probe_helper(self):
        part = liouville_partial(4)
        assert decimal_digit(part.value, 24) == 1
        assert decimal_digit(part.value, 23) == 0

    def test_domain(self):
        with pytest.raises(ValueError):
            liouville_partial(0)
