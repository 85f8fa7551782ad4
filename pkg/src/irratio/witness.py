"""Contradiction certificates for rational candidates of pi**2 and e.

For a candidate pi**2 = a/b the Niven pipeline produces the exact integer
N the proof would force into existence together with a rigorous enclosure
of the integral I that pins I into (0,1); N is computed along two fully
independent routes (substitution into the exact integral, and endpoint
evaluation of the auxiliary polynomial g) and cross-asserted.

For e = a/b the certificate is the integer M = n!·a/b - sum_{k<=n} n!/k!
with n = b, against the enclosure of n!(e - partial sum) in (0, 1/n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import factorial
from .numbers import RationalInterval
from .pi_engine import PrecisionExhausted, pi_enclosure
from .polynomials import niven_poly, nth_derivative
from .series import e_enclosure
from .trigpoly import (PiPoly, PiRat, TrigPoly, antiderivative_p_sin,
                       definite_01, pirat_eval_interval, pirat_substitute_pi2,
                       trig_derivative)

CONTRADICTION = "CONTRADICTION"
INCONCLUSIVE = "INCONCLUSIVE"

DEFAULT_MAX_PI_DIGITS = 4096

# 22/7 is used as the certified rational upper bound of pi when selecting n.
PI_UPPER_BOUND = Fraction(22, 7)


@lru_cache(maxsize=1)
def _certify_pi_upper_bound() -> bool:
    enc = pi_enclosure(6)
    assert enc.value.hi < PI_UPPER_BOUND, "22/7 failed certification as upper bound"
    return True


def choose_niven_n(a: int, b: int) -> int:
    """Minimal n with (22/7)·a**n/n! < 1, by linear search."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive integers")
    _certify_pi_upper_bound()
    n = 1
    power = a
    fact = 1
    while PI_UPPER_BOUND * power >= fact:
        n += 1
        power *= a
        fact *= n
    return n


def build_g(a: int, b: int, n: int) -> PiPoly:
    """g(x) = b**n · sum_k (-1)^k pi^(2n-2k) f^(2k)(x) for f the Niven
    polynomial of index n; only even pi-powers 0..2n occur."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = niven_poly(n)
    bn = b ** n
    g = PiPoly()
    d = f
    for k in range(n + 1):
        sign = -1 if k % 2 else 1
        g = g + PiPoly.from_poly(d, PiRat.term(sign * bn, 2 * n - 2 * k))
        d = nth_derivative(d, 2)
    return g


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of the exact symbolic identity checks behind the pi proof."""

    n: int
    ode_ok: bool
    antiderivative_ok: bool
    first_mismatch: tuple[str, int, int] | None  # (which, x-power, pi-exponent)

    @property
    def passed(self) -> bool:
        return self.ode_ok and self.antiderivative_ok


def _first_mismatch(left: PiPoly, right: PiPoly, label: str):
    n = max(len(left.coeffs), len(right.coeffs))
    for i in range(n):
        cl, cr = left.coeff(i), right.coeff(i)
        if cl != cr:
            exps = sorted(set(cl.exponents) | set(cr.exponents))
            for e in exps:
                if cl.coeff(e) != cr.coeff(e):
                    return (label, i, e)
    return None


def verify_ode_identity(a: int, b: int, n: int,
                        g_override: PiPoly | None = None) -> IdentityReport:
    """Check g'' + pi^2 g = b^n pi^(2n+2) f and the product/chain-rule
    identity (g' sin - pi·g cos)' = b^n pi^(2n+2) f sin, coefficient-wise.

    g_override substitutes a (possibly perturbed) g, for negative controls.
    """
    f = niven_poly(n)
    g = build_g(a, b, n) if g_override is None else g_override
    rhs = PiPoly.from_poly(f, PiRat.term(b ** n, 2 * n + 2))

    lhs_ode = g.derivative().derivative() + g.scale(PiRat.term(1, 2))
    mism = _first_mismatch(lhs_ode, rhs, "ode")
    ode_ok = mism is None

    T = TrigPoly(g.derivative(), g.scale(PiRat.term(-1, 1)), PiRat())
    dT = trig_derivative(T)
    mism2 = _first_mismatch(dT.sin_part, rhs, "antiderivative-sin")
    if mism2 is None and not dT.cos_part.is_zero:
        mism2 = _first_mismatch(dT.cos_part, PiPoly(), "antiderivative-cos")
    anti_ok = mism2 is None

    return IdentityReport(n, ode_ok, anti_ok, mism or mism2)


@dataclass(frozen=True)
class PiWitnessReport:
    a: int
    b: int
    n: int
    N: int
    I_exact: PiRat
    I_enclosure: RationalInterval
    upper_bound: Fraction
    verdict: str
    pi_digits: int


def pi_witness(a: int, b: int, n_override: int | None = None,
               max_pi_digits: int = DEFAULT_MAX_PI_DIGITS) -> PiWitnessReport:
    """Full contradiction certificate for the candidate pi**2 = a/b."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive integers")
    n = choose_niven_n(a, b)
    if n_override is not None:
        if PI_UPPER_BOUND * a ** n_override >= factorial(n_override):
            raise ValueError(
                f"n_override={n_override} violates (22/7)·a^n/n! < 1")
        n = n_override

    f = niven_poly(n)
    T = antiderivative_p_sin(f)
    integral = definite_01(T)  # exact value of ∫01 f·sin(pi x) dx
    I_exact = integral.shift(1) * (a ** n)
    exps = I_exact.exponents
    assert all(e % 2 == 0 for e in exps), "I must involve only even pi-powers"
    assert all(-(2 * n + 2) <= e <= 2 for e in exps), "pi-exponent out of range"

    candidate = Fraction(a, b)
    N_direct = pirat_substitute_pi2(I_exact, candidate)
    assert N_direct.denominator == 1, "N must be an exact integer"

    g = build_g(a, b, n)
    g0 = pirat_substitute_pi2(g(0), candidate)
    g1 = pirat_substitute_pi2(g(1), candidate)
    assert g0.denominator == 1 and g1.denominator == 1, \
        "g(0), g(1) must be integers under the substitution"
    assert N_direct == g0 + g1, \
        "central equality N = g(0)+g(1) failed between independent routes"
    N = int(N_direct)

    upper_bound = PI_UPPER_BOUND * a ** n / factorial(n)
    assert upper_bound < 1

    digits = 10 + n
    enclosure = None
    while digits <= max_pi_digits:
        pi_iv = pi_enclosure(digits).value
        # outward dyadic rounding keeps report endpoints readable
        enclosure = pirat_eval_interval(I_exact, pi_iv).simplify(4 * digits)
        if 0 < enclosure.lo and enclosure.hi < upper_bound:
            break
        digits *= 2
    else:
        raise PrecisionExhausted(
            f"pi precision cap {max_pi_digits} reached for candidate {a}/{b}")

    contradiction = N <= 0 or N >= 1 or not enclosure.contains(N)
    verdict = CONTRADICTION if contradiction else INCONCLUSIVE
    return PiWitnessReport(a, b, n, N, I_exact, enclosure, upper_bound,
                           verdict, digits)


@dataclass(frozen=True)
class EWitnessReport:
    a: int
    b: int
    n: int
    M: int
    tail_enclosure: RationalInterval
    verdict: str


def e_witness(a: int, b: int) -> EWitnessReport:
    """Contradiction certificate for the candidate e = a/b, with n = b."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive integers")
    n = b
    fact = factorial(n)
    scaled = Fraction(fact * a, b)
    assert scaled.denominator == 1, "n!·a/b must be an integer for n = b"
    partial_scaled = sum(fact // factorial(k) for k in range(n + 1))
    M = int(scaled) - partial_scaled

    digits = len(str(fact)) + len(str(n)) + 8
    e_iv = e_enclosure(digits).value
    partial = Fraction(partial_scaled, fact)
    tail = (e_iv - RationalInterval(partial)) * RationalInterval(fact)
    assert tail.strictly_inside(0, Fraction(1, n)), \
        "tail enclosure must lie in (0, 1/n)"

    contradiction = not tail.contains(M)
    verdict = CONTRADICTION if contradiction else INCONCLUSIVE
    return EWitnessReport(a, b, n, M, tail, verdict)
