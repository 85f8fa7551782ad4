"""Certified pi enclosures by two independent routes, plus continued fractions.

Route one brackets the smallest positive zero of cos by bisection with
certified cosine enclosures and doubles it.  Route two runs the classical
polygon doubling (harmonic then geometric mean of semiperimeters) starting
from the hexagon, using only interval square roots.  The two methods share
no code beyond rational arithmetic, so their agreement is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numbers import RationalInterval, iv_sqrt
from .series import cos_enclosure


class PrecisionExhausted(RuntimeError):
    """Raised when a certified computation hits its precision cap."""


@dataclass(frozen=True)
class PiEnclosure:
    value: RationalInterval
    method: str  # "cos-root" | "archimedes"
    effort: int  # bisection steps or doublings


def _cos_sign(x: Fraction, start_digits: int, max_digits: int) -> int:
    """Certified sign of cos(x), raising enclosure precision as needed."""
    digits = max(start_digits, 4)
    while digits <= max_digits:
        iv = cos_enclosure(x, digits).value
        if iv.lo > 0:
            return 1
        if iv.hi < 0:
            return -1
        digits *= 2
    raise PrecisionExhausted(f"cannot separate sign of cos({x})")


def pi_by_cos_root(precision_digits: int) -> PiEnclosure:
    """pi as twice the smallest positive zero of cos, bracketed by bisection.

    The bracket [lo, hi] keeps cos(lo) > 0 > cos(hi); midpoints are dyadic
    so enclosure arguments stay cheap.  The final doubled bracket has width
    below 10**-precision_digits / 4 (guard for downstream decimal use).
    """
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    lo, hi = Fraction(1), Fraction(2)
    target = Fraction(1, 8 * 10 ** precision_digits)  # per-side bracket width
    max_digits = 8 * precision_digits + 64
    steps = 0
    while hi - lo >= target:
        mid = (lo + hi) / 2
        # needed resolution tracks the bracket width
        need = len(str((1 / (hi - lo)).__ceil__())) + 6
        if _cos_sign(mid, need, max_digits) > 0:
            lo = mid
        else:
            hi = mid
        steps += 1
    return PiEnclosure(RationalInterval(2 * lo, 2 * hi), "cos-root", steps)


def _hexagon_start(bits: int) -> tuple[RationalInterval, RationalInterval]:
    # inscribed semiperimeter 3, circumscribed 2*sqrt(3)
    inscribed = RationalInterval(3, 3)
    circumscribed = 2 * iv_sqrt(RationalInterval(3, 3), bits)
    return inscribed, circumscribed


def _archimedes_iv(doublings: int, bits: int) -> tuple[RationalInterval, RationalInterval]:
    b, a = _hexagon_start(bits)
    for _ in range(doublings):
        a = (2 * a * b / (a + b)).simplify(4 * bits)
        b = iv_sqrt(b * a, bits).simplify(4 * bits)
    return b, a


def archimedes_bounds(doublings: int, precision_digits: int | None = None) -> PiEnclosure:
    """Semiperimeter bounds for the 6*2**doublings-gon on the unit circle.

    Each doubling replaces the circumscribed value by the harmonic mean and
    the inscribed one by the geometric mean, with outward-rounded square
    roots, so [inscribed.lo, circumscribed.hi] always contains pi.
    """
    if not 0 <= doublings <= 60:
        raise ValueError("doublings must be between 0 and 60")
    if precision_digits is None:
        precision_digits = doublings + 12
    bits = int(precision_digits * 3.33) + 16
    b, a = _archimedes_iv(doublings, bits)
    return PiEnclosure(RationalInterval(b.lo, a.hi), "archimedes", doublings)


def pi_enclosure(precision_digits: int, method: str = "archimedes") -> PiEnclosure:
    """pi to width < 10**-precision_digits by the requested method.

    Polygon doubling is the cheap route at high precision (one interval
    square root per doubling); the cos-root bisection is kept for
    cross-method checks.
    """
    if method == "cos-root":
        return pi_by_cos_root(precision_digits)
    if method != "archimedes":
        raise ValueError(f"unknown method {method!r}")
    target = Fraction(1, 10 ** precision_digits)
    bits = int(precision_digits * 3.33) + 32
    doublings = int(precision_digits * 1.67) + 4
    while True:
        b, a = _archimedes_iv(doublings, bits)
        iv = RationalInterval(b.lo, a.hi)
        if iv.width < target:
            return PiEnclosure(iv, "archimedes", doublings)
        doublings += 8
        bits += 32


def rhind_value() -> Fraction:
    """The ancient Egyptian circle constant (16/9)**2 = 256/81."""
    return Fraction(16, 9) ** 2


@dataclass(frozen=True)
class CFExpansion:
    partial_quotients: list[int]
    convergents: list[Fraction]
    certified_depth: int


def _convergents(quotients: list[int]) -> list[Fraction]:
    out = []
    p_prev, p = 1, quotients[0] if quotients else 0
    q_prev, q = 0, 1
    for i, a in enumerate(quotients):
        if i == 0:
            out.append(Fraction(p, q))
            continue
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append(Fraction(p, q))
    return out


def continued_fraction(x: RationalInterval, max_depth: int) -> CFExpansion:
    """Partial quotients certified common to every real in x.

    For a point interval this is the Euclidean expansion of the rational.
    For a proper interval, the Gauss map runs on both endpoints at once and
    stops at the first quotient on which they disagree; no quotient is ever
    guessed.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    quotients: list[int] = []
    lo, hi = x.lo, x.hi
    if lo == hi:
        r = lo
        while len(quotients) < max_depth:
            a = r.__floor__()
            quotients.append(a)
            r -= a
            if r == 0:
                break
            r = 1 / r
    else:
        while len(quotients) < max_depth:
            flo, fhi = lo.__floor__(), hi.__floor__()
            if flo != fhi:
                break
            quotients.append(flo)
            rlo, rhi = lo - flo, hi - fhi
            if rlo == 0 or rhi == 0:
                # an endpoint hit an integer: the next quotient is unbounded
                # on one side, nothing further is certified
                break
            lo, hi = 1 / rhi, 1 / rlo
    return CFExpansion(quotients, _convergents(quotients), len(quotients))
