"""The Bruhat-Tits tree of PGL(2, Q_p) and the projection from a disc.

A vertex is a homothety class of Z_p-lattices in Q_p^2.  Each class has a
unique basis [[p^a, c], [0, 1]] (columns) with c reduced modulo p^a Z_p to an
element of Z[1/p] in [0, p^a); that pair (a, c) is the canonical form.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .classes import AlphaClass
from .disc import LineKind
from .errors import (EqualBoundaryPoints, NotInDisc, NotLongLine, OddValuationAlpha,
                     SingularBasis)
from .geometry import PGL2Elt, Q
from .padic import _p, as_fraction, format_rational, valuation


def _reduce_mod(c: Fraction, a: int, p: int) -> Fraction:
    """The representative of c + p^a Z_p in Z[1/p] lying in [0, p^a)."""
    if c == 0:
        return Fraction(0)
    k = max(0, -valuation(c, p))
    if a + k <= 0:
        return Fraction(0)
    m = p ** (a + k)
    scaled = c * p ** k  # a p-adic integer
    r = scaled.numerator * pow(scaled.denominator, -1, m) % m
    return Fraction(r, p ** k)


@dataclass(frozen=True)
class TreeVertex:
    a: int
    c: Fraction

    @classmethod
    def from_basis(cls, m, ctx) -> "TreeVertex":
        """Class of the lattice spanned by the columns of m = ((m00, m01), (m10, m11))."""
        p = _p(ctx)
        (m00, m01), (m10, m11) = [[as_fraction(x) for x in row] for row in m]
        det = m00 * m11 - m01 * m10
        if det == 0:
            raise SingularBasis("basis is singular")
        # make the second column carry the bottom pivot
        if m11 == 0 or (m10 != 0 and valuation(m10, p) < valuation(m11, p)):
            m00, m01, m10, m11 = m01, m00, m11, m10
        k = m10 / m11
        top, corner = m00 - k * m01, m01
        a = valuation(top / m11, p)
        return cls(a, _reduce_mod(corner / m11, a, p))

    def basis(self, ctx):
        p = _p(ctx)
        return ((Fraction(p) ** self.a, self.c), (Fraction(0), Fraction(1)))

    def label(self) -> str:
        return f"a={self.a};c={format_rational(self.c)}"


def base_vertex() -> TreeVertex:
    return TreeVertex(0, Fraction(0))


def _mul(m, n):
    return tuple(tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


def _inv(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    if det == 0:
        raise SingularBasis("basis is singular")
    return ((d / det, -b / det), (-c / det, a / det))


def tree_distance(u: TreeVertex, w: TreeVertex, ctx) -> int:
    """|e1 - e2| for the elementary divisors p^e1, p^e2 of basis(u)^-1 basis(w)."""
    p = _p(ctx)
    m = _mul(_inv(u.basis(p)), w.basis(p))
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    lo = min(valuation(x, p) for row in m for x in row if x != 0)
    return valuation(det, p) - 2 * lo


def act(g: PGL2Elt, u: TreeVertex, ctx) -> TreeVertex:
    gm = ((g.a, g.b), (g.c, g.d))
    return TreeVertex.from_basis(_mul(gm, u.basis(ctx)), ctx)


def neighbors(u: TreeVertex, ctx) -> list:
    p = _p(ctx)
    m = u.basis(p)
    subs = [((Fraction(p), Fraction(i)), (Fraction(0), Fraction(1))) for i in range(p)]
    subs.append(((Fraction(1), Fraction(0)), (Fraction(0), Fraction(p))))
    return [TreeVertex.from_basis(_mul(m, s), p) for s in subs]


def ball(center: TreeVertex, radius: int, ctx):
    """Vertices within ``radius`` of ``center`` and the edges between them, BFS order."""
    seen, order, edges = {center: 0}, [center], []
    queue = deque([center])
    while queue:
        u = queue.popleft()
        if seen[u] == radius:
            continue
        for w in neighbors(u, ctx):
            if w not in seen:
                seen[w] = seen[u] + 1
                order.append(w)
                edges.append((u, w))
                queue.append(w)
    return order, edges


def export_dot(center: TreeVertex, radius: int, ctx) -> str:
    order, edges = ball(center, radius, ctx)
    lines = ["graph bruhat_tits {"]
    for v in order:
        lines.append(f'  "{v.label()}";')
    for u, w in edges:
        lines.append(f'  "{u.label()}" -- "{w.label()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# projection from the disc


def project(v, ctx) -> TreeVertex:
    """The vertex whose stabilizer contains the stabilizer of v.

    v / z = (alpha s^2, 0, 1) sheared by [[1, y/z], [0, 1]], and
    (alpha s^2, 0, 1) projects to Z_p (s, 0) + Z_p (0, 1), which only
    depends on the valuation of s.
    """
    p = _p(ctx)
    alpha: AlphaClass = v.alpha
    if not alpha.even_valuation:
        raise OddValuationAlpha("projection to a vertex needs alpha of even valuation")
    x, y, z = v.rep
    k2 = valuation(Q(v.rep) / (alpha.alpha_rep * z * z), p)
    if k2 % 2:
        raise NotInDisc("Q(v) is not in the class of alpha")
    basis = ((Fraction(p) ** (k2 // 2), y / z), (Fraction(0), Fraction(1)))
    return TreeVertex.from_basis(basis, p)


@dataclass(frozen=True)
class BoundaryPoint:
    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a, b) -> "BoundaryPoint":
        a, b = as_fraction(a), as_fraction(b)
        if a == 0 and b == 0:
            raise ValueError("[0:0] is not a point")
        if a != 0:
            return cls(Fraction(1), b / a)
        return cls(Fraction(0), Fraction(1))

    @classmethod
    def from_cone(cls, w) -> "BoundaryPoint":
        """K (a^2, ab, b^2) -> [a : b]."""
        x, y, z = (as_fraction(c) for c in w)
        return cls.of(x, y) if x != 0 else cls.of(0, 1)

    def moebius(self, g: PGL2Elt) -> "BoundaryPoint":
        return BoundaryPoint.of(*g.apply((self.a, self.b)))

    def __str__(self):
        return f"[{format_rational(self.a)}:{format_rational(self.b)}]"


def boundary_of_long_line(line: LineKind):
    if not line.is_long:
        raise NotLongLine("short lines have no boundary points")
    if not line.exact:
        raise NotLongLine("boundary points are irrational; use the PadicApprox endpoints")
    return tuple(BoundaryPoint.from_cone(w) for w in line.boundary)


def geodesic_vertices(b1: BoundaryPoint, b2: BoundaryPoint, ks, ctx) -> list:
    """Vertices Z_p p^k v1 + Z_p v2 for k in ks."""
    if b1 == b2:
        raise EqualBoundaryPoints("a geodesic needs two distinct ends")
    p = _p(ctx)
    out = []
    for k in ks:
        pk = Fraction(p) ** k
        out.append(TreeVertex.from_basis(((pk * b1.a, b2.a), (pk * b1.b, b2.b)), p))
    return out
