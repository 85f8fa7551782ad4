"""Rigorous enclosures of exp, sin, cos and e via tail-bounded partial sums.

All enclosures have exact rational endpoints.  "precision_digits" means the
final interval width is below 10**-digits; internally one guard factor of 2
is applied to the tail bound.  There is no argument reduction for sin/cos
(that would need pi itself), so their domain is capped at |x| <= 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import factorial
from .numbers import RationalInterval


@dataclass(frozen=True)
class Enclosure:
    """A certified interval for a real value plus how it was obtained."""

    value: RationalInterval
    terms_used: int
    tail_bound: Fraction


def e_enclosure(precision_digits: int) -> Enclosure:
    """Enclosure of e from the partial sum of 1/k! plus the geometric tail
    bound e - sum_{k<=n} 1/k! < 1/(n! n)."""
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    target = Fraction(1, 2 * 10 ** precision_digits)
    n = 1
    fact = 1
    partial = Fraction(2)  # 1/0! + 1/1!
    while Fraction(1, fact * n) >= target:
        n += 1
        fact *= n
        partial += Fraction(1, fact)
    tail = Fraction(1, fact * n)
    return Enclosure(RationalInterval(partial, partial + tail), n + 1, tail)


def exp_enclosure(x: Fraction, precision_digits: int) -> Enclosure:
    """Enclosure of e**x for rational 0 < x <= 1.

    The tail from term n+1 is bounded by the geometric estimate
    x^(n+1)/(n+1)! * (n+2)/(n+2-x), valid because successive term ratios
    are at most x/(n+2).
    """
    x = Fraction(x)
    if not 0 < x <= 1:
        raise ValueError("exp_enclosure requires 0 < x <= 1")
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    target = Fraction(1, 2 * 10 ** precision_digits)
    partial = Fraction(1)
    term = Fraction(1)
    n = 0
    while True:
        tail = term * x / (n + 1) / (1 - x / (n + 2))
        if tail < target:
            break
        n += 1
        term = term * x / n
        partial += term
    return Enclosure(RationalInterval(partial, partial + tail), n + 1, tail)


def _alternating_enclosure(terms_signed, decreasing_from, target) -> Enclosure:
    """Sum an alternating-type series until the first omitted term is both
    part of a strictly decreasing run and below target; enclose by +-bound."""
    partial = Fraction(0)
    k = 0
    while True:
        t_next = abs(terms_signed(k))
        if k >= decreasing_from and t_next < target:
            break
        partial += terms_signed(k)
        k += 1
    return Enclosure(RationalInterval(partial - t_next, partial + t_next),
                     k, t_next)


def sin_enclosure(x: Fraction, precision_digits: int) -> Enclosure:
    """Alternating-series enclosure of sin(x) for rational |x| <= 8."""
    x = Fraction(x)
    if abs(x) > 8:
        raise ValueError("sin_enclosure requires |x| <= 8")
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    if x == 0:
        return Enclosure(RationalInterval(0, 0), 0, Fraction(0))
    target = Fraction(1, 2 * 10 ** precision_digits)
    x2 = x * x
    # term magnitudes |x|^(2k+1)/(2k+1)! strictly decrease once
    # x^2 < (2k+2)(2k+3)
    k0 = 0
    while x2 >= (2 * k0 + 2) * (2 * k0 + 3):
        k0 += 1

    def term(k: int) -> Fraction:
        sign = -1 if k % 2 else 1
        return sign * x ** (2 * k + 1) / factorial(2 * k + 1)

    return _alternating_enclosure(term, k0, target)


def cos_enclosure(x: Fraction, precision_digits: int) -> Enclosure:
    """Alternating-series enclosure of cos(x) for rational |x| <= 8."""
    x = Fraction(x)
    if abs(x) > 8:
        raise ValueError("cos_enclosure requires |x| <= 8")
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    if x == 0:
        return Enclosure(RationalInterval(1, 1), 0, Fraction(0))
    target = Fraction(1, 2 * 10 ** precision_digits)
    x2 = x * x
    k0 = 0
    while x2 >= (2 * k0 + 1) * (2 * k0 + 2):
        k0 += 1

    def term(k: int) -> Fraction:
        sign = -1 if k % 2 else 1
        return sign * x ** (2 * k) / factorial(2 * k)

    return _alternating_enclosure(term, k0, target)


@dataclass(frozen=True)
class SandwichReport:
    """Exact comparison of (1+x/n)^n against the truncated exponential sum."""

    x: Fraction
    n: int
    lhs: Fraction  # (1+x/n)^n
    rhs: Fraction  # sum_{k<=n} x^k/k!
    strict: bool


def sandwich_check(x: Fraction, n: int) -> SandwichReport:
    """Evaluate (1+x/n)^n < sum_{k=0}^n x^k/k! exactly.

    Strict for n >= 2; at n = 1 both sides equal 1+x, reported as
    strict=False.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError("x must be positive")
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = (1 + x / n) ** n
    rhs = sum((x ** k / factorial(k) for k in range(n + 1)), Fraction(0))
    return SandwichReport(x, n, lhs, rhs, lhs < rhs)


@dataclass(frozen=True)
class SqueezeReport:
    """Certified status of the small-angle inequality chains at one h."""

    h: Fraction
    status: str  # "certified" | "insufficient-precision" | "failed"
    sin_over_h: RationalInterval
    one_minus_cos_over_h: RationalInterval
    cos: RationalInterval

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def squeeze_check(h: Fraction, precision_digits: int) -> SqueezeReport:
    """Verify cos(h) < sin(h)/h < 1 and 0 <= (1-cos h)/h <= h/2.

    Uses certified enclosures; an undecidable comparison means the
    requested precision was too low, not a counterexample.
    """
    h = Fraction(h)
    if not 0 < h <= Fraction(3, 2):
        raise ValueError("squeeze_check requires 0 < h <= 3/2")
    sin_iv = sin_enclosure(h, precision_digits).value
    cos_iv = cos_enclosure(h, precision_digits).value
    ratio = sin_iv / RationalInterval(h)
    omc = (1 - cos_iv) / RationalInterval(h)

    chain1_certified = cos_iv.hi < ratio.lo and ratio.hi < 1
    chain1_possible = cos_iv.lo < ratio.hi and ratio.lo < 1
    chain2_certified = omc.lo >= 0 and omc.hi <= h / 2
    chain2_possible = omc.hi >= 0 and omc.lo <= h / 2

    if chain1_certified and chain2_certified:
        status = "certified"
    elif chain1_possible and chain2_possible:
        status = "insufficient-precision"
    else:
        status = "failed"
    return SqueezeReport(h, status, ratio, omc, cos_iv)


def e_sandwich_enclosure(m: int) -> RationalInterval:
    """Independent enclosure of e from the monotone school sequences:
    (1+1/m)^m < e < (1+1/m)^(m+1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    base = 1 + Fraction(1, m)
    lo = base ** m
    return RationalInterval(lo, lo * base)
