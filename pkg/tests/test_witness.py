from fractions import Fraction

import pytest

from irratio.combinatorics import factorial
from irratio.pi_engine import PrecisionExhausted
from irratio.polynomials import niven_poly, nth_derivative
from irratio.trigpoly import (PiPoly, PiRat, antiderivative_p_sin,
                              definite_01, pirat_substitute_pi2)
from irratio.witness import (CONTRADICTION, build_g, choose_niven_n,
                             e_witness, pi_witness, verify_ode_identity)

F = Fraction


class TestChooseNivenN:
    def test_ten(self):
        # oracle: exact linear search over (22/7)*10^n/n! < 1
        n = 1
        while F(22, 7) * 10 ** n >= factorial(n):
            n += 1
        assert n == 26
        assert choose_niven_n(10, 1) == 26

    def test_one(self):
        # (22/7)/3! < 1 already holds at n=3, not earlier
        assert F(22, 7) * 1 >= factorial(2)
        assert F(22, 7) * 1 < factorial(3)
        assert choose_niven_n(1, 1) == 3

    def test_monotone_in_a(self):
        assert choose_niven_n(2, 1) >= choose_niven_n(1, 1)


class TestBuildG:
    def test_n1_structure(self):
        # hand expansion: g = b*(Pi^2 (x - x^2) + 2) for f = x - x^2
        for b in (1, 3):
            g = build_g(1, b, 1)
            assert g.coeff(0) == PiRat({0: 2 * b})
            assert g.coeff(1) == PiRat({2: b})
            assert g.coeff(2) == PiRat({2: -b})

    def test_highest_pi_power_is_f_term(self):
        n, b = 3, 2
        g = build_g(1, b, n)
        f = niven_poly(n)
        for j in range(2 * n + 1):
            assert g.coeff(j).coeff(2 * n) == b ** n * f.coeff(j)

    def test_g0_substituted(self):
        g = build_g(7, 4, 1)
        assert pirat_substitute_pi2(g(0), F(7, 4)) == 8  # 2b


class TestOdeIdentity:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_passes(self, n):
        assert verify_ode_identity(1, 1, n).passed

    def test_other_candidates(self):
        assert verify_ode_identity(5, 3, 4).passed

    def test_negative_control_locates_mismatch(self):
        n = 2
        g = build_g(1, 1, n)
        # drop the k=1 term (-1)^1 Pi^(2n-2) f'' from g
        term = PiPoly.from_poly(nth_derivative(niven_poly(n), 2),
                                PiRat.term(-1, 2 * n - 2))
        report = verify_ode_identity(1, 1, n, g_override=g - term)
        assert not report.passed
        assert report.first_mismatch is not None

    def test_identity_at_zero(self):
        # specialization x=0: g''(0) + Pi^2 g(0) = b^n Pi^(2n+2) f(0) = 0
        n, b = 3, 2
        g = build_g(1, b, n)
        assert g.derivative().derivative()(0) + g(0).shift(2) == PiRat()


class TestPiWitness:
    def test_candidate_one(self):
        r = pi_witness(1, 1)
        assert r.n == 3
        assert isinstance(r.N, int)
        assert r.upper_bound < 1
        assert r.I_enclosure.strictly_inside(0, 1)
        assert r.verdict == CONTRADICTION

    def test_central_equality_routes(self):
        # the cross-assert lives inside pi_witness; also check explicitly
        for a, b, n in [(2, 1, 4), (3, 2, 5), (7, 5, 3)]:
            I_exact = definite_01(
                antiderivative_p_sin(niven_poly(n))).shift(1) * a ** n
            g = build_g(a, b, n)
            cand = F(a, b)
            assert pirat_substitute_pi2(I_exact, cand) == \
                pirat_substitute_pi2(g(0), cand) + pirat_substitute_pi2(g(1), cand)

    def test_even_powers_only(self):
        for n in range(1, 13):
            I_exact = definite_01(
                antiderivative_p_sin(niven_poly(n))).shift(1)
            assert all(e % 2 == 0 for e in I_exact.exponents)

    def test_integrality_of_g_endpoints(self):
        for a, b, n in [(2, 1, 2), (10, 3, 4), (89, 9, 5)]:
            g = build_g(a, b, n)
            cand = F(a, b)
            assert pirat_substitute_pi2(g(0), cand).denominator == 1
            assert pirat_substitute_pi2(g(1), cand).denominator == 1

    def test_invalid_override(self):
        with pytest.raises(ValueError):
            pi_witness(10, 1, n_override=5)

    def test_precision_cap(self):
        with pytest.raises(PrecisionExhausted):
            pi_witness(10, 1, max_pi_digits=8)

    def test_invalid_candidate(self):
        with pytest.raises(ValueError):
            pi_witness(0, 1)


class TestEWitness:
    def test_nineteen_sevenths(self):
        r = e_witness(19, 7)
        assert r.n == 7
        assert r.M == -20
        assert r.tail_enclosure.strictly_inside(F(140, 1000), F(141, 1000))
        assert r.verdict == CONTRADICTION

    def test_three_over_one(self):
        r = e_witness(3, 1)
        assert r.n == 1
        assert r.M == 1
        assert r.tail_enclosure.strictly_inside(0, 1)
        assert r.verdict == CONTRADICTION

    def test_tail_bound_up_to_fifty(self):
        for b in range(1, 51):
            r = e_witness(3 * b, b)
            assert r.tail_enclosure.strictly_inside(0, F(1, b))

    def test_invalid(self):
        with pytest.raises(ValueError):
            e_witness(1, 0)
