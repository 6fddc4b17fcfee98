"""The triangle for H = squares: points [p^n1 u1 : 1 : p^n2 u2] with u1, u2
square units, its Hilbert distance and the map to the hexagonal lattice Z[j]."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroCoordinate, ZeroVector
from .geometry import is_zero, vec
from .oracle import cross_ratio
from .padic import _p, haar_ball_measure, is_square, smallest_symmetric_ball, valuation

E = (vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1))
# e_i(v) = Bpolar(phi_i, v) for these phi_i (Bpolar(e_3, v) = x, etc.)
FORMS = (vec(0, 0, 1), vec(0, Fraction(-1, 2), 0), vec(1, 0, 0))


@dataclass(frozen=True)
class TrianglePoint:
    n1: int
    n2: int
    u1: Fraction
    u2: Fraction
    p: int

    @property
    def rep(self):
        p = Fraction(self.p)
        return (p ** self.n1 * self.u1, Fraction(1), p ** self.n2 * self.u2)


@dataclass(frozen=True)
class HexPoint:
    m1: int
    m2: int


def in_triangle(v, ctx):
    """The TrianglePoint of v, or None when a coordinate ratio has non-square unit part."""
    p = _p(ctx)
    v = vec(*v)
    if is_zero(v):
        raise ZeroVector("zero vector")
    if 0 in v:
        raise ZeroCoordinate("all three coordinates must be nonzero")
    r1, r2 = v[0] / v[1], v[2] / v[1]
    n1, n2 = valuation(r1, p), valuation(r2, p)
    u1, u2 = r1 / Fraction(p) ** n1, r2 / Fraction(p) ** n2
    if not (is_square(u1, p) and is_square(u2, p)):
        return None
    return TrianglePoint(n1, n2, u1, u2, p)


def triangle_oracle(P1: TrianglePoint, P2: TrianglePoint, ctx) -> Fraction:
    """Measure of the smallest symmetric ball over the 9 cross-ratios of the
    three coordinate forms (the whole, finite, dual)."""
    vals = [cross_ratio(f, g, P1.rep, P2.rep) for f in FORMS for g in FORMS]
    return haar_ball_measure(smallest_symmetric_ball(vals, ctx), ctx)


def triangle_distance(P1: TrianglePoint, P2: TrianglePoint, ctx) -> Fraction:
    N, M = P1.n1 - P2.n1, P1.n2 - P2.n2
    if (N, M) != (0, 0):
        return Fraction(max(abs(N), abs(M), abs(N - M)) + 1)
    return triangle_oracle(P1, P2, ctx)


def hex_project(P: TrianglePoint) -> HexPoint:
    return HexPoint(P.n1, P.n2)


def hex_distance(h1: HexPoint, h2: HexPoint) -> int:
    a, b = h1.m1 - h2.m1, h1.m2 - h2.m2
    return max(abs(a), abs(b), abs(a - b))


def hex_ball(center: HexPoint, radius: int) -> list:
    return [HexPoint(center.m1 + a, center.m2 + b)
            for a in range(-radius, radius + 1) for b in range(-radius, radius + 1)
            if hex_distance(HexPoint(a, b), HexPoint(0, 0)) <= radius]


def render_hexmap(center: HexPoint, radius: int, marked=()) -> str:
    """Text rendering of the hex grid around ``center``; marked cells are '#'."""
    marked = set(marked)
    rows = []
    for b in range(radius, -radius - 1, -1):
        cells = []
        for a in range(-radius, radius + 1):
            h = HexPoint(center.m1 + a, center.m2 + b)
            if hex_distance(h, center) > radius:
                cells.append(" ")
            else:
                cells.append("#" if h in marked else ".")
        rows.append(" " * (radius - b + radius) + " ".join(cells).rstrip())
    return "\n".join(r.rstrip() for r in rows) + "\n"
