"""Brute-force reference computations straight from the definitions.

The dual of a disc is the semi-cone C_alpha, whose points are K-multiples of
(a^2, ab, b^2).  Cross-ratios do not see that scalar, so sampling P^1 at a
finite depth is enough to approximate the set of cross-ratios.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .classes import AlphaClass, ball_measure_in_K, in_K
from .disc import in_disc
from .errors import NotInDisc, ZeroDenominator, ZeroVector
from .geometry import Bpolar, Q, is_zero, proportional, vec
from .padic import NEG_INF, _p, int_valuation

MIN_DEPTH = 3


def cross_ratio(phi, phi2, v, v2) -> Fraction:
    """[phi, phi', v, v'] = phi(v')/phi(v) * phi'(v)/phi'(v'), functionals paired by B."""
    phi, phi2, v, v2 = vec(*phi), vec(*phi2), vec(*v), vec(*v2)
    a, b = Bpolar(phi, v), Bpolar(phi2, v2)
    if a == 0 or b == 0:
        raise ZeroDenominator("a functional vanishes on a point")
    return Bpolar(phi, v2) / a * Bpolar(phi2, v) / b


@dataclass(frozen=True)
class DualSample:
    depth: int
    points: tuple


def _p1(p: int, depth: int):
    m = p ** depth
    yield (1, 0)
    for b in range(m):
        yield (b, 1)
    for a in range(p, m, p):
        yield (1, a)


def sample_dual(alpha: AlphaClass, depth: int, ctx) -> DualSample:
    """Points (a^2, ab, b^2) over the two-chart cover of P^1 mod p^depth.

    The first chart is [b : 1], the second [1 : a] with p | a; the point
    (1, 0, 0) is [1 : 0] and (0, 0, 1) is [0 : 1].
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    p = _p(ctx)
    pts = tuple(vec(a * a, a * b, b * b) for a, b in _p1(p, depth))
    return DualSample(depth, pts)


@dataclass(frozen=True)
class OracleDistance:
    value: Fraction
    depth_used: int
    stable: bool
    exponent: float


def _integral(v) -> tuple:
    d = lcm(*(c.denominator for c in v))
    w = [int(c * d) for c in v]
    g = gcd(*w)
    return tuple(c // g for c in w)


def _exponent_at_depth(v, w, p: int, depth: int):
    """Smallest symmetric-ball exponent over cross-ratios from the sample.

    With g(phi) = phi(w)/phi(v), every cross-ratio is g(phi)/g(phi').  The
    sample is closed enough that the extreme ratio is attained against the
    point of largest/smallest |g|, or, when all |g| agree, against any fixed
    reference point (ultrametric diameter).
    """
    vi, wi = _integral(v), _integral(w)
    vals = []
    for a, b in _p1(p, depth):
        fv = vi[2] * a * a - 2 * vi[1] * a * b + vi[0] * b * b
        fw = wi[2] * a * a - 2 * wi[1] * a * b + wi[0] * b * b
        if fv == 0 or fw == 0:
            continue
        vals.append((fw, fv))
    exps = [int_valuation(fw, p) - int_valuation(fv, p) for fw, fv in vals]
    lo, hi = min(exps), max(exps)
    if lo != hi:
        return hi - lo
    # all g of the same size: measure how far g/g0 strays from 1
    fw0, fv0 = vals[0]
    t = NEG_INF
    for fw, fv in vals[1:]:
        num = fw * fv0 - fw0 * fv
        if num == 0:
            continue
        e = -(int_valuation(num, p) - int_valuation(fw0 * fv, p))
        t = max(t, e)
    return t


def oracle_distance(v, w, alpha: AlphaClass, depth: int, ctx) -> OracleDistance:
    """Hilbert distance from the cross-ratios of a depth-``depth`` dual sample.

    ``stable`` records whether depth - 1 gives the same value.
    """
    p = _p(ctx)
    v, w = vec(*v), vec(*w)
    for x in (v, w):
        if not in_disc(x, alpha, p):
            raise NotInDisc(f"{x} is not in the disc")
    if proportional(v, w):
        return OracleDistance(Fraction(0), depth, True, NEG_INF)
    t = _exponent_at_depth(v, w, p, depth)
    stable = depth > 1 and _exponent_at_depth(v, w, p, depth - 1) == t
    return OracleDistance(ball_measure_in_K(t, alpha, p), depth, stable, t)


def _v(n: int, p: int) -> float:
    return int_valuation(n, p) if n else float("inf")


class _Form:
    """f(u) = c2 u^2 + c1 u + c0 with integer coefficients, on discs c + p^d Z_p."""

    def __init__(self, c2, c1, c0, p):
        self.c, self.p = (c2, c1, c0), p

    def at(self, u):
        c2, c1, c0 = self.c
        return (c2 * u + c1) * u + c0

    def slope(self, u):
        return 2 * self.c[0] * u + self.c[1]

    def rigidity(self, u, d):
        """e such that f = f(u)(1 + O(p^e)) on u + p^d Z_p (e <= 0: not rigid)."""
        p = self.p
        vf = _v(self.at(u), p)
        return min(d + _v(self.slope(u), p), 2 * d + _v(self.c[0], p)) - vf


def _charts(vi, wi):
    # [u : 1] with u in Z_p, and [1 : u] with u in pZ_p
    fv1 = _Form(vi[2], -2 * vi[1], vi[0], 0)
    fw1 = _Form(wi[2], -2 * wi[1], wi[0], 0)
    fv2 = _Form(vi[0], -2 * vi[1], vi[2], 0)
    fw2 = _Form(wi[0], -2 * wi[1], wi[2], 0)
    return [((fv1, fw1), 0, 0), ((fv2, fw2), 0, 1)]


def exact_exponent(v, w, ctx):
    """Exponent of the smallest symmetric ball over the whole dual cone.

    Residue discs of P^1 are split until both functionals are rigid on each
    (constant up to a factor 1 + O(p^e)); the ball is then read off the disc
    centres, refining further only where a disc could still enlarge it.
    Returns (t, deepest level visited).
    """
    p = _p(ctx)
    vi, wi = _integral(vec(*v)), _integral(vec(*w))
    work = []
    for (fv, fw), c, d in _charts(vi, wi):
        fv.p = fw.p = p
        work.append((fv, fw, c, d))
    rigid, deepest = [], 0
    while work:
        fv, fw, c, d = work.pop()
        deepest = max(deepest, d)
        e = min(fv.rigidity(c, d), fw.rigidity(c, d))
        if e > 0:
            rigid.append((fv, fw, c, d, e))
        else:
            work.extend((fv, fw, c + p ** d * i, d + 1) for i in range(p))
    vals = [(fw.at(c), fv.at(c)) for fv, fw, c, _, _ in rigid]
    exps = [_v(a, p) - _v(b, p) for a, b in vals]
    if min(exps) != max(exps):
        return max(exps) - min(exps), deepest
    a0, b0 = vals[0]
    t = NEG_INF
    pending = list(rigid)
    while pending:
        nxt = []
        for fv, fw, c, d, e in pending:
            a, b = fw.at(c), fv.at(c)
            num = a * b0 - a0 * b
            dev = -(_v(num, p) - _v(a0 * b, p)) if num else NEG_INF
            if dev > -e:
                t = max(t, dev)
            elif -e > t:
                # the disc might still hold a larger deviation; look closer
                for i in range(p):
                    c2 = c + p ** d * i
                    e2 = min(fv.rigidity(c2, d + 1), fw.rigidity(c2, d + 1))
                    nxt.append((fv, fw, c2, d + 1, e2))
                    deepest = max(deepest, d + 1)
        pending = nxt
    return t, deepest


def oracle_distance_stable(v, w, alpha: AlphaClass, ctx) -> OracleDistance:
    """Definition-level distance over the full dual, by adaptive refinement."""
    p = _p(ctx)
    v, w = vec(*v), vec(*w)
    for x in (v, w):
        if not in_disc(x, alpha, p):
            raise NotInDisc(f"{x} is not in the disc")
    if proportional(v, w):
        return OracleDistance(Fraction(0), 0, True, NEG_INF)
    t, deepest = exact_exponent(v, w, p)
    return OracleDistance(ball_measure_in_K(t, alpha, p), deepest, True, t)


def oracle_in_dual_check(v, alpha: AlphaClass, depth: int, ctx) -> bool:
    """B(v, w) in K_alpha for every sampled cone point w."""
    p = _p(ctx)
    v = vec(*v)
    if is_zero(v):
        raise ZeroVector("zero vector")
    if Q(v) == 0:
        # v is a cone point itself and B(v, v) = 0; no finite sample sees this
        return False
    for w in sample_dual(alpha, depth, p).points:
        b = Bpolar(v, w)
        if b == 0 or not in_K(b, alpha, p):
            return False
    return True
