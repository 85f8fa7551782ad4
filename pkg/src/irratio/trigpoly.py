"""Exact symbolic algebra for P(x)sin(Px) + Q(x)cos(Px) + c.

P here is a *formal* symbol standing for pi: PiRat is a Laurent polynomial
in that symbol with rational coefficients, and no numeric value of pi ever
enters a symbolic computation.  Numerics happen only in pirat_eval_interval,
which evaluates a PiRat over a certified pi enclosure.

The class of trig-polynomials is closed under differentiation and admits
exact antiderivatives for p(x)sin(Px); endpoint evaluation over [0,1] uses
the formal rules sin(0)=sin(P)=0, cos(0)=1, cos(P)=-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .numbers import RationalInterval
from .polynomials import Poly

ScalarLike = Union[int, Fraction]


class PiRat:
    """Laurent polynomial in the formal pi symbol, exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, ScalarLike] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[int(k)] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PiRat is immutable")

    @classmethod
    def from_rational(cls, r: ScalarLike) -> "PiRat":
        return cls({0: Fraction(r)})

    @classmethod
    def term(cls, coeff: ScalarLike, exponent: int = 0) -> "PiRat":
        return cls({exponent: Fraction(coeff)})

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def shift(self, k: int) -> "PiRat":
        """Multiply by the k-th power of the pi symbol."""
        return PiRat({e + k: c for e, c in self._terms.items()})

    def __add__(self, other) -> "PiRat":
        other = _as_pirat(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return PiRat(out)

    __radd__ = __add__

    def __neg__(self) -> "PiRat":
        return PiRat({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "PiRat":
        return self + (-_as_pirat(other))

    def __rsub__(self, other) -> "PiRat":
        return _as_pirat(other) - self

    def __mul__(self, other) -> "PiRat":
        if isinstance(other, (int, Fraction)):
            return PiRat({e: c * other for e, c in self._terms.items()})
        other = _as_pirat(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return PiRat(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PiRat.from_rational(other)
        if not isinstance(other, PiRat):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if self.is_zero:
            return "PiRat(0)"
        parts = [f"{c}·Π^{e}" if e else f"{c}" for e, c in self.items()]
        return "PiRat(" + " + ".join(parts) + ")"


def _as_pirat(v) -> PiRat:
    if isinstance(v, PiRat):
        return v
    if isinstance(v, (int, Fraction)):
        return PiRat.from_rational(v)
    raise TypeError(f"cannot interpret {v!r} as PiRat")


PI_SYMBOL = PiRat.term(1, 1)


def pirat_substitute_pi2(L: PiRat, t: ScalarLike) -> Fraction:
    """Replace every even power 2k of the pi symbol by t**k, exactly.

    Only defined when all exponents are even; an odd exponent means L is
    not a polynomial in pi**2.
    """
    t = Fraction(t)
    out = Fraction(0)
    for e, c in L.items():
        if e % 2:
            raise ValueError(f"odd pi-exponent {e}: not a polynomial in pi^2")
        out += c * t ** (e // 2)
    return out


def pirat_eval_interval(L: PiRat, pi_iv: RationalInterval) -> RationalInterval:
    """Interval containing L(pi) for every pi in pi_iv."""
    out = RationalInterval(0, 0)
    for e, c in L.items():
        out = out + pi_iv.power(e) * RationalInterval(c)
    return out


class PiPoly:
    """Dense polynomial in x whose coefficients are PiRat values."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[PiRat] = ()):
        cs = [_as_pirat(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PiPoly is immutable")

    @classmethod
    def from_poly(cls, p: Poly, scale: PiRat | None = None) -> "PiPoly":
        scale = PiRat.from_rational(1) if scale is None else scale
        return cls([scale * PiRat.from_rational(c) for c in p.coeffs])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> PiRat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else PiRat()

    def derivative(self) -> "PiPoly":
        return PiPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: ScalarLike) -> PiRat:
        x = Fraction(x)
        acc = PiRat()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "PiPoly") -> "PiPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return PiPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "PiPoly") -> "PiPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return PiPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "PiPoly":
        return PiPoly([-c for c in self.coeffs])

    def scale(self, s: PiRat | ScalarLike) -> "PiPoly":
        s = _as_pirat(s)
        return PiPoly([c * s for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PiPoly({list(self.coeffs)})"


@dataclass(frozen=True)
class TrigPoly:
    """sin_part(x)·sin(Px) + cos_part(x)·cos(Px) + const.

    The additive scalar is carried explicitly: the actual constant function
    is (0, 0, c), so constants of integration stay visible and definite
    integrals are provably invariant under them.
    """

    sin_part: PiPoly = field(default_factory=PiPoly)
    cos_part: PiPoly = field(default_factory=PiPoly)
    const: PiRat = field(default_factory=PiRat)


def trig_derivative(T: TrigPoly) -> TrigPoly:
    """Product and chain rule on the trig-polynomial class:
    (P sin + Q cos + c)' = (P' - pi·Q) sin + (Q' + pi·P) cos."""
    p, q = T.sin_part, T.cos_part
    return TrigPoly(p.derivative() - q.scale(PI_SYMBOL),
                    q.derivative() + p.scale(PI_SYMBOL),
                    PiRat())


def antiderivative_p_sin(p: PiPoly | Poly) -> TrigPoly:
    """Exact antiderivative of p(x)·sin(Px), by repeated integration by parts.

    Closed form: sin-part p'/pi^2 - p'''/pi^4 + ..., cos-part
    -p/pi + p''/pi^3 - ...; the construction is verified symbolically by
    differentiating the result.
    """
    if isinstance(p, Poly):
        p = PiPoly.from_poly(p)
    sin_part = PiPoly()
    cos_part = PiPoly()
    d = p
    j = 0
    while not d.is_zero:
        exponent = -(j + 1)
        half = j // 2
        if j % 2 == 0:
            sign = -1 if half % 2 == 0 else 1  # -, +, -, ... on cos side
            cos_part = cos_part + d.scale(PiRat.term(sign, exponent))
        else:
            sign = 1 if half % 2 == 0 else -1  # +, -, +, ... on sin side
            sin_part = sin_part + d.scale(PiRat.term(sign, exponent))
        d = d.derivative()
        j += 1
    T = TrigPoly(sin_part, cos_part, PiRat())
    check = trig_derivative(T)
    assert check.sin_part == p and check.cos_part.is_zero, \
        "antiderivative failed symbolic verification"
    return T


def definite_01(T: TrigPoly) -> PiRat:
    """T(1) - T(0) under sin(0)=sin(P)=0, cos(0)=1, cos(P)=-1.

    Sin terms vanish at both ends and the additive constant cancels, so the
    value is -cos_part(1) - cos_part(0)."""
    q = T.cos_part
    return -(q(1) + q(0))
