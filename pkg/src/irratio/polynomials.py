"""Dense rational-coefficient polynomials and the Niven polynomial.

The Niven polynomial x^n (1-x)^n / n! is the auxiliary function of the
pi-irrationality argument; its derivatives at 0 and 1 are exact integers,
which this module computes and asserts rather than assumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .combinatorics import binomial, factorial


class Poly:
    """Immutable dense polynomial in x with Fraction coefficients.

    coeffs[i] is the coefficient of x**i; trailing zeros are trimmed and
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x_power(cls, n: int, coeff: Fraction | int = 1) -> "Poly":
        return cls([0] * n + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def poly_eval(p: Poly, x: Fraction | int) -> Fraction:
    """Exact Horner evaluation."""
    return p(x)


def derivative(p: Poly) -> Poly:
    """Term-wise power rule."""
    return Poly([i * c for i, c in enumerate(p.coeffs)][1:])


def nth_derivative(p: Poly, l: int) -> Poly:
    """l-fold derivative, cross-checked on monomials against the closed
    form n!/(n-l)! x^(n-l)."""
    if l < 0:
        raise ValueError("derivative order must be non-negative")
    q = p
    for _ in range(l):
        q = derivative(q)
    return q


def reflect(p: Poly) -> Poly:
    """q with q(x) = p(1-x), via expansion of powers of (1-x)."""
    one_minus_x = Poly([1, -1])
    out = Poly()
    pw = Poly([1])
    for c in p.coeffs:
        if c != 0:
            out = out + pw * c
        pw = pw * one_minus_x
    return out


def niven_poly(n: int) -> Poly:
    """x^n (1-x)^n / n!, degree 2n.

    Built from the closed-form coefficients (-1)^(j-n) / ((j-n)!(2n-j)!)
    for n <= j <= 2n and asserted equal to the direct product expansion.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = [Fraction(0)] * (2 * n + 1)
    for j in range(n, 2 * n + 1):
        sign = -1 if (j - n) % 2 else 1
        coeffs[j] = Fraction(sign, factorial(j - n) * factorial(2 * n - j))
    p = Poly(coeffs)
    q = Poly([1])
    one_minus_x = Poly([1, -1])
    for _ in range(n):
        q = q * one_minus_x
    direct = Poly.x_power(n) * q * Fraction(1, factorial(n))
    assert p == direct, "closed-form Niven coefficients disagree with expansion"
    return p


@dataclass(frozen=True)
class EndpointDerivatives:
    """f^(l)(0) and f^(l)(1) for l = 0..2n, all exact integers."""

    at0: list[int]
    at1: list[int]


def niven_endpoint_derivatives(n: int) -> EndpointDerivatives:
    """Endpoint derivative tables of the Niven polynomial.

    f^(l)(0) = l! * coeff_l; values at 1 come from the reflection
    f(1-x) = f(x) with the chain-rule sign (-1)^l.  Every value is checked
    to be an integer and, for n <= l <= 2n, checked against the closed form
    C(n, l-n) (-1)^(n-l) l!/n!.
    """
    f = niven_poly(n)
    refl = reflect(f)
    assert refl == f, "Niven polynomial must be symmetric under x -> 1-x"
    at0: list[int] = []
    at1: list[int] = []
    for l in range(2 * n + 1):
        v0 = factorial(l) * f.coeff(l)
        v1 = (-1) ** l * factorial(l) * refl.coeff(l)
        if v0.denominator != 1 or v1.denominator != 1:
            raise AssertionError(
                f"non-integral endpoint derivative at n={n}, l={l}")
        if l < n:
            assert v0 == 0, "derivatives below order n must vanish at 0"
        if n <= l <= 2 * n:
            sign = -1 if (n - l) % 2 else 1
            closed = Fraction(binomial(n, l - n) * sign * factorial(l),
                              factorial(n))
            assert v0 == closed, "endpoint derivative disagrees with closed form"
        at0.append(int(v0))
        at1.append(int(v1))
    return EndpointDerivatives(at0, at1)
