"""Admissible square classes and the norm groups K_alpha.

K_alpha = {alpha x^2 + y^2} is the group of norms from Q_p(sqrt(-alpha)); it
plays the part of the positive reals.  Membership is a Hilbert symbol.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotAdmissible, ZeroInput
from .padic import (NEG_INF, SquareClass, _p, all_square_classes, as_fraction,
                    class_from_label, hilbert_symbol, square_class)


@dataclass(frozen=True)
class AlphaClass:
    """A square class not containing -1, with representative of valuation 0 or 1."""

    cls: SquareClass

    def __post_init__(self):
        if square_class(-self.cls.rep, self.cls.p).rep == 1:
            raise NotAdmissible(f"-1 lies in the class {self.cls.label}")

    @property
    def p(self) -> int:
        return self.cls.p

    @property
    def alpha_rep(self) -> Fraction:
        return self.cls.rep

    @property
    def label(self) -> str:
        return self.cls.label

    @property
    def even_valuation(self) -> bool:
        return self.cls.parity == 0

    @classmethod
    def from_label(cls, label: str, ctx) -> "AlphaClass":
        return cls(class_from_label(label, ctx))

    @classmethod
    def of(cls, alpha, ctx) -> "AlphaClass":
        return cls(square_class(alpha, ctx))

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class NormGroupK:
    alpha: AlphaClass

    def __contains__(self, z) -> bool:
        return in_K(z, self, self.alpha.p)


def admissible_classes(ctx) -> list[AlphaClass]:
    p = _p(ctx)
    minus_one = square_class(-1, p)
    return [AlphaClass(c) for c in all_square_classes(p) if c != minus_one]


def _alpha(K) -> AlphaClass:
    return K.alpha if isinstance(K, NormGroupK) else K


def in_K(z, K, ctx) -> bool:
    """z is a norm from Q_p(sqrt(-alpha)), i.e. represented by alpha x^2 + y^2."""
    z = as_fraction(z)
    if z == 0:
        raise ZeroInput("0 is not in K")
    return hilbert_symbol(-_alpha(K).alpha_rep, z, ctx) == 1


def minus_one_in_K(K, ctx) -> bool:
    return in_K(-1, K, ctx)


def orbit_count(K, ctx) -> int:
    """Number of K.Ad(PSL2)-orbits making up the disc."""
    return 2 if minus_one_in_K(K, ctx) else 1


def hyperboloid_sheets(beta: SquareClass, ctx) -> int:
    """1 when -1 lies in beta (one-sheeted hyperboloid), else 2."""
    return 1 if square_class(-beta.rep, ctx).rep == 1 else 2


def k_classes(K, ctx) -> list[SquareClass]:
    """The square classes contained in K (always half of them)."""
    return [c for c in all_square_classes(ctx) if in_K(c.rep, K, ctx)]


@lru_cache(maxsize=None)
def _shell_fraction(p: int, alpha_rep: Fraction, k: int) -> Fraction:
    """Proportion of the shell p^k Z_p^* lying in K."""
    K = AlphaClass.of(alpha_rep, p)
    e = 3 if p == 2 else 1
    units = [u for u in range(1, p**e) if u % p]
    hits = sum(in_K(Fraction(p) ** k * u, K, p) for u in units)
    return Fraction(hits, len(units))


@lru_cache(maxsize=None)
def _small_ball_fraction(p: int, alpha_rep: Fraction, m: int) -> Fraction:
    """Proportion of 1 + p^m Z_p lying in K (m >= 1)."""
    if p != 2 or m >= 3:
        return Fraction(1)
    K = AlphaClass.of(alpha_rep, p)
    units = [u for u in range(1, 8, 2) if (u - 1) % 2**m == 0]
    return Fraction(sum(in_K(u, K, 2) for u in units), len(units))


def ball_measure_in_K(t, K, ctx) -> Fraction:
    """Haar measure (mu(Z_p^*) = 1) of the symmetric ball of radius p^t
    intersected with K.

    Cross-ratios of disc points all lie in K, so this is the measure that
    turns the smallest symmetric ball into a distance on the disc.  It agrees
    with ``haar_ball_measure`` on every radius reachable from cross-ratios
    when alpha has even valuation; for odd valuation it halves each shell.
    """
    if t == NEG_INF:
        return Fraction(0)
    p = _p(ctx)
    a = _alpha(K).alpha_rep
    if t >= 0:
        return sum((_shell_fraction(p, a, k) for k in range(-t, t + 1)), Fraction(0))
    m = -t
    return Fraction(p) ** (1 - m) / (p - 1) * _small_ball_fraction(p, a, m)
