"""Exact p-adic bookkeeping on rationals, plus a small fixed-precision carrier.

Decision procedures (valuations, square classes, Hilbert symbols) work on
``fractions.Fraction`` and are exact.  Only square roots produce
finite-precision data, carried by :class:`PadicApprox`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import NotASquare, PrecisionExhausted, ZeroInput

INF = math.inf
NEG_INF = -math.inf

RationalLike = Union[int, Fraction, str]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PadicContext:
    """Prime, working precision and the escalation cap for p-adic digits.

    The Haar measure on Q_p^* is always normalized by mu(Z_p^*) = 1.
    """

    p: int
    precision: int = 32
    max_precision: int = 4096

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.precision < 8:
            raise ValueError("precision must be at least 8")

    def with_precision(self, precision: int) -> "PadicContext":
        return PadicContext(self.p, precision, self.max_precision)

    def escalations(self):
        """Yield contexts with precision doubling up to the cap."""
        n = self.precision
        while n <= self.max_precision:
            yield self.with_precision(n)
            n *= 2


def _p(ctx) -> int:
    return ctx if isinstance(ctx, int) else ctx.p


def as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def int_valuation(n: int, p: int) -> int:
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: RationalLike, ctx) -> int:
    """v_p(x); ``math.inf`` for zero."""
    x = as_fraction(x)
    if x == 0:
        return INF
    p = _p(ctx)
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def norm(x: RationalLike, ctx) -> Fraction:
    v = valuation(x, ctx)
    if v == INF:
        return Fraction(0)
    return Fraction(_p(ctx)) ** (-v)


def unit_part(x: RationalLike, ctx) -> Fraction:
    x = as_fraction(x)
    if x == 0:
        raise ZeroInput("zero has no unit part")
    return x / Fraction(_p(ctx)) ** valuation(x, ctx)


def unit_residue(x: RationalLike, ctx, k: int = 1) -> int:
    """Unit part of x reduced modulo p^k, as an integer in [0, p^k)."""
    u = unit_part(x, ctx)
    m = _p(ctx) ** k
    return u.numerator * pow(u.denominator, -1, m) % m


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    return next(a for a in range(2, p) if legendre(a, p) == -1)


# ---------------------------------------------------------------------------
# square classes


_P2_UNIT_LABELS = {1: "1", 7: "-1", 5: "5", 3: "-5"}
_P2_UNIT_REPS = {1: 1, 7: -1, 5: 5, 3: -5}


@dataclass(frozen=True)
class SquareClass:
    """A coset of Q_p^* modulo squares.

    ``parity`` is the valuation mod 2.  ``unit`` is 1 or the fixed
    non-residue eps for odd p, and the residue mod 8 (1, 3, 5, 7) for p = 2.
    """

    p: int
    parity: int
    unit: int

    @property
    def rep(self) -> Fraction:
        if self.p == 2:
            u = _P2_UNIT_REPS[self.unit]
        else:
            u = self.unit
        return Fraction(u * self.p**self.parity)

    @property
    def label(self) -> str:
        if self.p == 2:
            u = _P2_UNIT_REPS[self.unit]
            return str(u * 2**self.parity)
        base = "1" if self.unit == 1 else "eps"
        if self.parity == 0:
            return base
        return "p" if self.unit == 1 else "eps*p"

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return square_class(self.rep * other.rep, self.p)

    def contains(self, x: RationalLike) -> bool:
        return x != 0 and square_class(x, self.p) == self

    def __str__(self):
        return self.label


def square_class(x: RationalLike, ctx) -> SquareClass:
    x = as_fraction(x)
    if x == 0:
        raise ZeroInput("zero has no square class")
    p = _p(ctx)
    parity = valuation(x, p) % 2
    if p == 2:
        return SquareClass(2, parity, unit_residue(x, 2, 3))
    r = unit_residue(x, p)
    unit = 1 if legendre(r, p) == 1 else smallest_nonresidue(p)
    return SquareClass(p, parity, unit)


def all_square_classes(ctx) -> list[SquareClass]:
    p = _p(ctx)
    if p == 2:
        return [SquareClass(2, v, u) for v in (0, 1) for u in (1, 7, 5, 3)]
    eps = smallest_nonresidue(p)
    return [SquareClass(p, v, u) for v in (0, 1) for u in (1, eps)]


def class_from_label(label: str, ctx) -> SquareClass:
    p = _p(ctx)
    for c in all_square_classes(p):
        if c.label == label.strip():
            return c
    raise ValueError(f"unknown square-class label {label!r} for p={p}")


def is_square(x: RationalLike, ctx) -> bool:
    return x != 0 and square_class(x, ctx).rep == 1


def rational_sqrt(x: RationalLike):
    """Exact square root in Q, or None."""
    x = as_fraction(x)
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


# ---------------------------------------------------------------------------
# Hilbert symbol


def hilbert_symbol(a: RationalLike, b: RationalLike, ctx) -> int:
    a, b = as_fraction(a), as_fraction(b)
    if a == 0 or b == 0:
        raise ZeroInput("Hilbert symbol of zero")
    p = _p(ctx)
    va, vb = valuation(a, p), valuation(b, p)
    if p == 2:
        u, w = unit_residue(a, 2, 3), unit_residue(b, 2, 3)
        eps = lambda t: ((t - 1) // 2) % 2
        omega = lambda t: ((t * t - 1) // 8) % 2
        e = eps(u) * eps(w) + va * omega(w) + vb * omega(u)
        return -1 if e % 2 else 1
    u, w = unit_residue(a, p), unit_residue(b, p)
    sign = -1 if (va * vb * ((p - 1) // 2)) % 2 else 1
    return sign * legendre(u, p) ** (vb % 2) * legendre(w, p) ** (va % 2)


# ---------------------------------------------------------------------------
# finite-precision p-adic numbers


@dataclass(frozen=True)
class PadicApprox:
    """p^valuation * (unit + O(p^precision)).

    With ``precision == 0`` the value is indistinguishable from zero and
    ``valuation`` is the absolute precision, i.e. the value is O(p^valuation).
    """

    p: int
    valuation: int
    unit: int
    precision: int

    @classmethod
    def from_rational(cls, x: RationalLike, p: int, precision: int) -> "PadicApprox":
        x = as_fraction(x)
        if x == 0:
            raise ZeroInput("exact zero has no finite-precision expansion")
        return cls(p, valuation(x, p), unit_residue(x, p, precision), precision)

    @classmethod
    def zero(cls, p: int, absolute_precision: int) -> "PadicApprox":
        return cls(p, absolute_precision, 0, 0)

    @property
    def is_zero(self) -> bool:
        return self.precision <= 0

    @property
    def absolute_precision(self) -> int:
        return self.valuation + self.precision

    @property
    def unit_digits(self) -> int:
        return self.unit

    def val(self) -> int:
        if self.is_zero:
            raise PrecisionExhausted("valuation undecided: value is zero to working precision")
        return self.valuation

    def to_fraction(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.unit * Fraction(self.p) ** self.valuation

    def _coerce(self, other) -> "PadicApprox":
        if isinstance(other, PadicApprox):
            return other
        other = as_fraction(other)
        if other == 0:
            return PadicApprox.zero(self.p, 10**9)
        # an exact zero carries a huge valuation; it says nothing about precision
        own = abs(self.valuation) if not self.is_zero else 32
        prec = max(self.precision, 1) + own + abs(valuation(other, self.p)) + 4
        return PadicApprox.from_rational(other, self.p, prec)

    def __add__(self, other):
        other = self._coerce(other)
        p = self.p
        a = min(self.absolute_precision, other.absolute_precision)
        terms = [t for t in (self, other) if not t.is_zero]
        if not terms:
            return PadicApprox.zero(p, a)
        m = min(t.valuation for t in terms)
        if a <= m:
            return PadicApprox.zero(p, a)
        mod = p ** (a - m)
        s = sum(t.unit * p ** (t.valuation - m) for t in terms) % mod
        if s == 0:
            return PadicApprox.zero(p, a)
        k = int_valuation(s, p)
        v = m + k
        return PadicApprox(p, v, (s // p**k) % p ** (a - v), a - v)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return PadicApprox(self.p, self.valuation, (-self.unit) % self.p**self.precision, self.precision)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        p = self.p
        if self.is_zero and other.is_zero:
            return PadicApprox.zero(p, self.valuation + other.valuation)
        if self.is_zero or other.is_zero:
            z, nz = (self, other) if self.is_zero else (other, self)
            return PadicApprox.zero(p, z.valuation + nz.valuation)
        prec = min(self.precision, other.precision)
        return PadicApprox(p, self.valuation + other.valuation, self.unit * other.unit % p**prec, prec)

    __rmul__ = __mul__

    def inverse(self) -> "PadicApprox":
        if self.is_zero:
            raise PrecisionExhausted("division by a value that is zero to working precision")
        m = self.p**self.precision
        return PadicApprox(self.p, -self.valuation, pow(self.unit, -1, m), self.precision)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def square_class(self) -> SquareClass:
        need = 3 if self.p == 2 else 1
        if self.is_zero or self.precision < need:
            raise PrecisionExhausted("not enough digits to decide the square class")
        return square_class(self.to_fraction(), self.p)

    def __repr__(self):
        if self.is_zero:
            return f"O({self.p}^{self.valuation})"
        return f"{self.p}^{self.valuation}*({self.unit} + O({self.p}^{self.precision}))"


def approx(x, p: int, precision: int) -> PadicApprox:
    if isinstance(x, PadicApprox):
        return x
    x = as_fraction(x)
    if x == 0:
        return PadicApprox.zero(p, 10**9)
    return PadicApprox.from_rational(x, p, precision)


def _sqrt_unit_mod(u: int, p: int, k: int) -> int:
    """r with r^2 = u mod p^k; for p = 2 (u = 1 mod 8, known mod 2^(k+2))
    the congruence holds mod 2^(k+2), so r is a true root mod 2^k."""
    if p == 2:
        r = 1
        for i in range(3, k + 2):
            if (r * r - u) % 2 ** (i + 1):
                r += 2 ** (i - 1)
        return r
    r = next(t for t in range(1, p) if (t * t - u) % p == 0)
    mod = p
    while mod < p**k:
        mod = min(mod * mod, p**k)
        r = (r - (r * r - u) * pow(2 * r, -1, mod)) % mod
    return r


def hensel_sqrt(x, ctx, precision: int | None = None) -> PadicApprox:
    """Square root with ``precision`` (default ``ctx.precision``) significant digits.

    Of the two roots, the one with the smaller leading digit is returned
    (ties, which only happen for p = 2, go to the smaller residue).
    """
    p = _p(ctx)
    n = precision or (ctx.precision if isinstance(ctx, PadicContext) else 32)
    if isinstance(x, PadicApprox):
        if x.is_zero:
            raise ZeroInput("square root of zero")
        if x.valuation % 2:
            raise NotASquare(f"{x} has odd valuation")
        n = min(n, x.precision - (2 if p == 2 else 0))
        if n <= 0:
            raise PrecisionExhausted("not enough digits for a square root")
        v, u = x.valuation, x.unit
        if (p == 2 and u % 8 != 1) or (p != 2 and legendre(u, p) != 1):
            raise NotASquare(f"{x} is not a square")
    else:
        x = as_fraction(x)
        if x == 0:
            raise ZeroInput("square root of zero")
        if not is_square(x, p):
            raise NotASquare(f"{x} is not a square in Q_{p}")
        v = valuation(x, p)
        u = unit_residue(x, p, n + (3 if p == 2 else 0))
    mod = p**n
    r = _sqrt_unit_mod(u, p, n) % mod
    roots = sorted({r, (-r) % mod}, key=lambda t: (t % p, t))
    return PadicApprox(p, v // 2, roots[0], n)


# ---------------------------------------------------------------------------
# Haar measure and symmetric balls


def haar_ball_measure(t, ctx) -> Fraction:
    """mu of the symmetric ball of radius p^t, with mu(Z_p^*) = 1."""
    if t == NEG_INF:
        return Fraction(0)
    p = _p(ctx)
    if t >= 0:
        return Fraction(t + 1)
    return Fraction(p) ** (t + 1) / (p - 1)


def _ball_exponent(x, p: int):
    if isinstance(x, PadicApprox):
        if x.is_zero:
            raise ZeroInput("zero value")
        d = x - 1
        if d.is_zero:
            # x agrees with 1 to all known digits; the exponent is not decided.
            raise PrecisionExhausted("cannot separate value from 1")
        e1 = -d.val()
        e2 = -(x.inverse() - 1).val()
        return max(e1, e2)
    x = as_fraction(x)
    if x == 0:
        raise ZeroInput("zero value")
    if x == 1:
        return NEG_INF
    return max(-valuation(x - 1, p), -valuation(1 / x - 1, p))


def smallest_symmetric_ball(values: Iterable, ctx):
    """Radius exponent t of the smallest ball {|x-1| <= p^t, |1/x-1| <= p^t}
    containing all values; ``-inf`` when every value is 1."""
    p = _p(ctx)
    return max((_ball_exponent(x, p) for x in values), default=NEG_INF)
