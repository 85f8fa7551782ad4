from fractions import Fraction

import pytest

from irratio.numbers import RationalInterval
from irratio.pi_engine import (archimedes_bounds, continued_fraction,
                               pi_by_cos_root, pi_enclosure, rhind_value)

F = Fraction

ARCHIMEDES_LOWER = F(31408450, 10 ** 7)
ARCHIMEDES_UPPER = F(31428572, 10 ** 7)


class TestCosRoot:
    def test_six_digits(self):
        iv = pi_by_cos_root(6).value
        assert iv.lo >= F(3141592, 10 ** 6)
        assert iv.hi <= F(3141593, 10 ** 6)

    def test_one_digit(self):
        iv = pi_by_cos_root(1).value
        assert iv.lo >= F(31, 10) and iv.hi <= F(32, 10)

    def test_historical_approximations_sides(self):
        iv = pi_by_cos_root(3).value
        assert F(314, 100) < iv.lo
        assert iv.hi < F(22, 7)


class TestArchimedes:
    def test_96gon_inside_historical_bounds(self):
        iv = archimedes_bounds(4).value
        assert ARCHIMEDES_LOWER <= iv.lo and iv.hi <= ARCHIMEDES_UPPER

    def test_hexagon(self):
        iv = archimedes_bounds(0).value
        assert iv.lo == 3
        # circumscribed hexagon semiperimeter 2*sqrt(3)
        assert F(34641, 10 ** 4) < iv.hi < F(34642, 10 ** 4)

    def test_ten_doublings(self):
        iv = archimedes_bounds(10).value
        assert iv.width < F(1, 10 ** 5)
        iv.intersect(pi_by_cos_root(8).value)  # raises if disjoint

    def test_monotone_refinement(self):
        prev = archimedes_bounds(0, 30).value
        for d in range(1, 9):
            cur = archimedes_bounds(d, 30).value
            slack = cur.width + prev.width
            assert cur.lo >= prev.lo - slack
            assert cur.hi <= prev.hi + slack
            assert cur.width < prev.width
            prev = cur

    def test_doublings_cap(self):
        with pytest.raises(ValueError):
            archimedes_bounds(61)


class TestCrossMethod:
    @pytest.mark.parametrize("digits", [4, 8, 12])
    def test_methods_agree(self, digits):
        a = pi_by_cos_root(digits).value
        b = pi_enclosure(digits, "archimedes").value
        overlap = a.intersect(b)
        assert a.contains(overlap.midpoint)
        assert b.contains(overlap.midpoint)


class TestRhind:
    def test_value(self):
        assert rhind_value() == F(256, 81)

    def test_decimal_prefix(self):
        # long-division oracle: 256/81 = 3.160493827...
        num = 256 * 10 ** 6
        assert num // 81 == 3160493
        from irratio.numbers import to_decimal
        assert to_decimal(RationalInterval(rhind_value()), 6).startswith("3.160493")

    def test_certifiably_not_pi(self):
        assert rhind_value() > archimedes_bounds(4).value.hi


class TestContinuedFraction:
    def test_point_22_7(self):
        cf = continued_fraction(RationalInterval(F(22, 7)), 10)
        assert cf.partial_quotients == [3, 7]
        assert cf.convergents == [F(3), F(22, 7)]

    def test_point_integer(self):
        cf = continued_fraction(RationalInterval(F(2)), 5)
        assert cf.partial_quotients == [2]

    def test_pi_expansion(self):
        cf = continued_fraction(pi_enclosure(15).value, 5)
        assert cf.partial_quotients == [3, 7, 15, 1, 292]
        assert F(22, 7) in cf.convergents
        assert F(355, 113) in cf.convergents

    def test_convergent_quality(self):
        iv = pi_enclosure(20).value
        cf = continued_fraction(iv, 8)
        mid = iv.midpoint
        for c in cf.convergents:
            assert abs(mid - c) < F(1, c.denominator ** 2)

    def test_euclid_oracle(self):
        # quotients of a point rational must match the Euclidean algorithm
        for num, den in [(355, 113), (649, 200), (1, 7), (8, 5)]:
            expected = []
            a, b = num, den
            while b:
                expected.append(a // b)
                a, b = b, a % b
            cf = continued_fraction(RationalInterval(F(num, den)), 20)
            assert cf.partial_quotients == expected
            assert cf.convergents[-1] == F(num, den)
