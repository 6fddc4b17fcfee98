"""Hyperbolic discs D_alpha: membership, lines, Hilbert distance, circles.

Everything is driven by three exact invariants of a pair v, v':
  B = Bpolar(v, v'),  Delta = B^2 - 4 Q(v) Q(v'),  R = B^2 / (4 Q(v) Q(v')).
The line through v, v' is long iff Delta is a nonzero square; the two
boundary cross-ratios lam, 1/lam are the roots of t^2 - (4R - 2) t + 1, so
(lam - 1)^2 / lam = 4 (R - 1) = 4T with T = Delta / (4 Q Q').
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .classes import AlphaClass, ball_measure_in_K, in_K, minus_one_in_K
from .errors import (DegenerateRadii, DomainError, NotInDisc, NotInPerp, NotLongLine, OddPOnly,
                     PrecisionExhausted, SamePoint, ZeroVector)
from .geometry import PGL2Elt, Bpolar, Q, Vec3, add, is_zero, isom_action, pole, scale, vec
from .padic import (NEG_INF, PadicApprox, PadicContext, _p, as_fraction, hensel_sqrt,
                    is_square, rational_sqrt, square_class, valuation)


def _ctx(ctx) -> PadicContext:
    return ctx if isinstance(ctx, PadicContext) else PadicContext(ctx)


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True, eq=False)
class SpherePoint:
    """A point of (Q_p^3 - 0)/K_alpha."""

    rep: Vec3
    alpha: AlphaClass

    def __post_init__(self):
        object.__setattr__(self, "rep", vec(*self.rep))
        if is_zero(self.rep):
            raise ZeroVector("zero vector")

    def key(self):
        # Dividing by the first nonzero coordinate c leaves only the K-class of c.
        c = next(x for x in self.rep if x != 0)
        return (tuple(x / c for x in self.rep), in_K(c, self.alpha, self.alpha.p))

    def __eq__(self, other):
        if not isinstance(other, SpherePoint):
            return NotImplemented
        return self.alpha == other.alpha and self.key() == other.key()

    def __hash__(self):
        return hash((self.alpha, self.key()))


@dataclass(frozen=True, eq=False)
class DiscPoint:
    pt: SpherePoint

    def __post_init__(self):
        if not in_disc(self.pt.rep, self.pt.alpha, self.pt.alpha.p):
            raise NotInDisc(f"{self.pt.rep} is not in the disc {self.pt.alpha}")
        assert in_K(self.pt.rep[2], self.pt.alpha, self.pt.alpha.p)

    @classmethod
    def of(cls, v, alpha: AlphaClass) -> "DiscPoint":
        return cls(SpherePoint(vec(*v), alpha))

    @property
    def rep(self) -> Vec3:
        return self.pt.rep

    @property
    def alpha(self) -> AlphaClass:
        return self.pt.alpha

    def __eq__(self, other):
        return isinstance(other, DiscPoint) and self.pt == other.pt

    def __hash__(self):
        return hash(self.pt)


def _rep(v):
    return v.rep if isinstance(v, (DiscPoint, SpherePoint)) else vec(*v)


def in_disc(v, alpha: AlphaClass, ctx) -> bool:
    """Q(v) in alpha and x in K_alpha.

    B(v, (a^2, ab, b^2)) = z a^2 - 2 y ab + x b^2 is a binary form of
    determinant Q(v); when Q(v) lies in alpha it is anisotropic and its values
    fill x.K_alpha, so the universally quantified duality condition reduces
    to these two checks.
    """
    v = vec(*v)
    if is_zero(v):
        raise ZeroVector("zero vector")
    q = Q(v)
    if q == 0 or square_class(q, ctx) != alpha.cls:
        return False
    return in_K(v[0], alpha, ctx)


def to_disc(v, alpha: AlphaClass, ctx) -> Optional[Vec3]:
    """The representative of the projective point [v] lying in the disc, if any."""
    v = vec(*v)
    c = next(x for x in v if x != 0)
    w = scale(v[0] if v[0] != 0 else c, v)
    return w if in_disc(w, alpha, ctx) else None


# ---------------------------------------------------------------------------
# duals


class DualKind(enum.Enum):
    CONE_ONLY = "cone-only"
    CONE_AND_DISC = "cone-and-disc"


def dual_description(alpha: AlphaClass, ctx) -> DualKind:
    """The dual of D_alpha inside the alpha-sphere.

    Always the semi-cone: a disc point u can never be in the dual because some
    other disc point is B-orthogonal to it (see ``dual_disc_witness``), and
    0 is not in K_alpha.
    """
    return DualKind.CONE_ONLY


def dual_disc_witness(u, alpha: AlphaClass, ctx) -> Vec3:
    """A disc point v with Bpolar(u, v) = 0, for a disc point u.

    At the normal form (a', 0, 1) the orthogonal plane is {(-a'z, y, z)},
    where Q = -(a'z^2 + y^2) lies in -K.  A disc point there exists exactly
    when -1 is in K; it is then carried back by the normalizing element.
    """
    u = vec(*u)
    if not in_disc(u, alpha, ctx):
        raise NotInDisc("u is not in the disc")
    if not minus_one_in_K(alpha, ctx):
        raise DomainError("-1 is not in K: no disc point is orthogonal to u")
    nf = reduce_to_normal_form(DiscPoint.of(u, alpha), ctx)
    ap, p = nf.alpha_prime, alpha.p
    # a'z^2 and y^2 must be of comparable size, so z ~ p^(-v(a')/2)
    j0 = -(valuation(ap, p) // 2)
    for h in range(1, 6 * p):
        for j in (j0, j0 - 1, j0 + 1):
            for y in range(1, h + 1):
                for z in (h, -h):
                    z = Fraction(p) ** j * z
                    w = to_disc((-ap * z, Fraction(y), z), alpha, ctx)
                    if w is not None:
                        return to_disc(isom_action(nf.g, w), alpha, ctx)
    raise PrecisionExhausted("no witness found among small vectors")


# ---------------------------------------------------------------------------
# lines


@dataclass(frozen=True)
class LineKind:
    tag: str  # "long" or "short"
    boundary: Optional[tuple] = None  # two isotropic vectors (Fractions or PadicApprox)
    exact: bool = True

    @property
    def is_long(self) -> bool:
        return self.tag == "long"


def pair_invariants(v, w):
    v, w = _rep(v), _rep(w)
    b = Bpolar(v, w)
    qq = Q(v) * Q(w)
    return b, b * b - 4 * qq, qq


def _cone_scale(w, alpha: AlphaClass, ctx):
    """Rescale an isotropic vector so its outer coordinates lie in alpha."""
    p = alpha.p
    lead = w[0] if not _is0(w[0]) else w[2]
    if isinstance(lead, PadicApprox):
        cls = lead.square_class()
        k = PadicApprox.from_rational(cls.rep * alpha.alpha_rep, p, lead.precision) / lead
        return tuple(k * c for c in w)
    k = square_class(lead, p).rep * alpha.alpha_rep / lead
    return scale(k, w)


def _is0(c) -> bool:
    return c.is_zero if isinstance(c, PadicApprox) else c == 0


def classify_line(v, w, ctx) -> LineKind:
    ctx = _ctx(ctx)
    alpha = v.alpha if isinstance(v, DiscPoint) else None
    v, w = _rep(v), _rep(w)
    b, delta, _ = pair_invariants(v, w)
    if delta == 0:
        raise SamePoint("the two points coincide")
    if not is_square(delta, ctx):
        return LineKind("short")
    q = Q(v)
    root = rational_sqrt(delta)
    ends = []
    if root is not None:
        for sgn in (1, -1):
            # Q(s v + t w) = 0 with t = 2Q(v), s = -B +- sqrt(Delta)
            e = add(scale(-b + sgn * root, v), scale(2 * q, w))
            ends.append(e)
        exact = True
    else:
        r = hensel_sqrt(delta, ctx)
        for sgn in (1, -1):
            s = r * sgn - b
            t = 2 * q
            ends.append(tuple(s * v[i] + t * w[i] for i in range(3)))
        exact = False
    if alpha is not None:
        ends = [_cone_scale(e, alpha, ctx) for e in ends]
    return LineKind("long", tuple(ends), exact)


# ---------------------------------------------------------------------------
# distances


@dataclass(frozen=True)
class MultDistance:
    R: Fraction
    lam: tuple  # (lam, 1/lam), Fractions when rational, else PadicApprox
    n: int  # p^n = max(|lam - 1|, |1/lam - 1|)

    def contains(self, r) -> bool:
        r = as_fraction(r)
        return self.R == (r + 2 + 1 / r) / 4


def _norm_exponent(T: Fraction, p: int) -> int:
    """n with p^n = max(|lam-1|, |1/lam-1|), from (lam-1)^2/lam = 4T."""
    s = -valuation(4 * T, p)
    if s > 0:
        return s
    if s % 2:
        raise NotLongLine("odd unit-scale exponent; line is not long")
    return s // 2


def mult_distance(v, w, ctx) -> MultDistance:
    ctx = _ctx(ctx)
    v, w = _rep(v), _rep(w)
    b, delta, qq = pair_invariants(v, w)
    if delta == 0:
        raise SamePoint("the two points coincide")
    if not is_square(delta, ctx):
        raise NotLongLine("short line")
    R = b * b / (4 * qq)
    root = rational_sqrt(delta)
    if root is not None:
        lam = ((b * b - 2 * qq + b * root) / (2 * qq), (b * b - 2 * qq - b * root) / (2 * qq))
    else:
        for c in ctx.escalations():
            try:
                r = hensel_sqrt(delta, c)
                l1 = (r * b + (b * b - 2 * qq)) / (2 * qq)
                lam = (l1, l1.inverse())
                break
            except PrecisionExhausted:
                continue
        else:
            raise PrecisionExhausted("escalation cap reached")
    return MultDistance(R, lam, _norm_exponent(R - 1, ctx.p))


def distance_exponent(v, w, ctx):
    """The radius exponent t of the smallest symmetric ball of cross-ratios."""
    p = _p(ctx)
    _, delta, qq = pair_invariants(v, w)
    if delta == 0:
        return NEG_INF
    T = delta / (4 * qq)
    if is_square(delta, p):
        return _norm_exponent(T, p)
    s = -valuation(T, p)
    return min(0, s // 2)


def hilbert_distance(v, w, ctx, alpha: AlphaClass | None = None) -> Fraction:
    """Exact Hilbert distance for odd p."""
    p = _p(ctx)
    if p == 2:
        raise OddPOnly("closed form proved for odd p only; use oracle_distance")
    alpha = alpha or (v.alpha if isinstance(v, DiscPoint) else None)
    if alpha is None:
        raise TypeError("alpha required for raw vectors")
    return ball_measure_in_K(distance_exponent(v, w, p), alpha, p)


def same_ultrametric_locus(v, w, ctx, alpha=None) -> bool:
    return hilbert_distance(v, w, ctx, alpha) <= 1


# ---------------------------------------------------------------------------
# normal forms and orbits


@dataclass(frozen=True)
class NormalForm:
    """v / z = isom_action(g, (alpha_prime, 0, 1)) with alpha_prime = alpha s^2."""

    g: PGL2Elt
    alpha_prime: Fraction
    s: PadicApprox
    z: Fraction


def reduce_to_normal_form(v, ctx) -> NormalForm:
    ctx = _ctx(ctx)
    alpha = v.alpha
    x, y, z = v.rep
    g = PGL2Elt(1, y / z, 0, 1)
    ap = Q(v.rep) / (z * z)
    s = hensel_sqrt(ap / alpha.alpha_rep, ctx)
    return NormalForm(g, ap, s, z)


def orbit_label(v, ctx) -> frozenset:
    """Which K.Ad(PSL2)-orbit v lies in.

    v = z s Ad(h) v_alpha with det h = s; the sign of s is not determined, so
    the label is the set of K-classes of +-s.
    """
    nf = reduce_to_normal_form(v, ctx)
    s_rep = nf.s.square_class().rep
    a = v.alpha
    return frozenset({in_K(s_rep, a, a.p), in_K(-s_rep, a, a.p)})


# ---------------------------------------------------------------------------
# circles and orthogonality


def _radius_invariant(r) -> Fraction:
    r = as_fraction(r)
    if r == 0:
        raise DegenerateRadii("radius 0")
    return (r + 2 + 1 / r) / 4


def circle_contains(center, r, v, ctx) -> bool:
    """D(center, v) = {r, 1/r}, tested on the exact invariant R."""
    target = _radius_invariant(r)
    if isinstance(v, CirclePoint):
        return v.invariant(_rep(center)) == target
    c, v = _rep(center), _rep(v)
    b, delta, qq = pair_invariants(c, v)
    if delta == 0:
        return False
    if not is_square(delta, ctx):
        raise NotLongLine("center and point span a short line")
    return b * b / (4 * qq) == target


def reflection(u, v) -> Vec3:
    """B-orthogonal reflection of v in the anisotropic vector u."""
    return add(v, scale(-Bpolar(v, u) / Bpolar(u, u), scale(2, u)))


@dataclass(frozen=True)
class CirclePoint:
    """The point q + sign sqrt(m) u, with q B-orthogonal to u.

    Q and the pairing with anything orthogonal to u are rational even when
    sqrt(m) is not, which keeps circle membership exact.
    """

    q: Vec3
    u: Vec3
    m: Fraction
    sign: int

    def Qv(self) -> Fraction:
        return Q(self.q) + self.m * Q(self.u)

    def invariant(self, c) -> Fraction:
        if Bpolar(c, self.u) != 0:
            raise NotInPerp("center is not orthogonal to the pencil axis")
        b = Bpolar(c, self.q)
        return b * b / (4 * Q(c) * self.Qv())

    def rational(self) -> Optional[Vec3]:
        if self.m == 0:
            return self.q
        r = rational_sqrt(self.m)
        return None if r is None else add(self.q, scale(self.sign * r, self.u))

    def approx(self, ctx) -> tuple:
        r = self.rational()
        if r is not None:
            return r
        root = hensel_sqrt(self.m, _ctx(ctx)) * self.sign
        return tuple(root * self.u[i] + self.q[i] for i in range(3))

    def swapped(self) -> "CirclePoint":
        """Image under the reflection in u."""
        return CirclePoint(self.q, self.u, self.m, -self.sign)

    def in_disc(self, alpha: AlphaClass, ctx) -> bool:
        # projective points with Q in alpha always carry a disc representative
        q = self.Qv()
        return q != 0 and square_class(q, ctx) == alpha.cls


@dataclass(frozen=True)
class CircleIntersection:
    points: tuple  # CirclePoint, or PadicApprox vectors when not exact
    exact: bool
    pole: Vec3

    def rational_points(self, alpha: AlphaClass, ctx) -> list:
        out = []
        for pt in self.points:
            r = pt.rational() if isinstance(pt, CirclePoint) else None
            if r is not None:
                out.append(to_disc(r, alpha, ctx))
        return out


def circle_intersection(c1, r1, c2, r2, ctx) -> CircleIntersection:
    """Points v of the disc with D(c1, v) = {r1, 1/r1} and D(c2, v) = {r2, 1/r2}.

    On both circles B(c1, v) = +-kappa B(c2, v) with kappa^2 = R1 Q1 / (R2 Q2);
    each sign gives a line through the pole u of c1, c2, met by the first
    circle at q +- sqrt(m) u.  The reflection in u swaps the two points.
    Two conics may share four points, and they sometimes do.
    """
    ctx = _ctx(ctx)
    alpha = c1.alpha
    r1, r2 = as_fraction(r1), as_fraction(r2)
    if 1 in (r1, r2):
        raise DegenerateRadii("radii must differ from 1")
    R1, R2 = _radius_invariant(r1), _radius_invariant(r2)
    a, b = c1.rep, c2.rep
    _, delta, _ = pair_invariants(a, b)
    if delta == 0:
        raise SamePoint("equal centers")
    if not is_square(delta, ctx):
        raise NotLongLine("centers span a short line")
    Q1, Q2, B12 = Q(a), Q(b), Bpolar(a, b)
    u = pole(a, b)
    Qu = Q(u)
    k2 = R1 * Q1 / (R2 * Q2)
    if not is_square(k2, ctx):
        return CircleIntersection((), True, u)
    kappa = rational_sqrt(k2)
    exact = kappa is not None
    if not exact:
        kappa = hensel_sqrt(k2, ctx)
    pts = []
    for sg in (1, -1):
        ca = B12 - 2 * sg * kappa * Q2
        cb = (2 * Q1 - sg * kappa * B12) * -1
        if _is0(ca) and _is0(cb):
            continue
        q = tuple(ca * a[i] + cb * b[i] for i in range(3))
        bq = Bpolar(a, q)
        m = (bq * bq / (4 * R1 * Q1) - Q(q)) / Qu
        if exact:
            if m != 0 and not is_square(m, ctx):
                continue
            cand = [CirclePoint(q, u, m, e) for e in ((1,) if m == 0 else (1, -1))]
            pts.extend(c for c in cand if c.in_disc(alpha, ctx))
        else:
            if not _is0(m) and m.square_class().rep != 1:
                continue
            root = hensel_sqrt(m, ctx) if not _is0(m) else None
            for e in ((1,) if root is None else (1, -1)):
                pts.append(q if root is None else
                           tuple(q[i] + root * u[i] * e for i in range(3)))
    return CircleIntersection(tuple(pts), exact, u)


def orthogonal_lines(base, dir1, dir2, ctx) -> bool:
    v = _rep(base)
    d1, d2 = vec(*dir1), vec(*dir2)
    if is_zero(d1) or is_zero(d2):
        raise ZeroVector("zero direction")
    if Bpolar(v, d1) != 0 or Bpolar(v, d2) != 0:
        raise NotInPerp("direction not in the orthogonal of the base point")
    return Bpolar(d1, d2) == 0


def stabilizer_element(alpha: AlphaClass, t, reflect: bool = False) -> PGL2Elt:
    """An element of Stab(v_alpha) from the rational point t of a^2 + alpha c^2 = 1.

    Rotations are [[a, -alpha c], [c, a]] and reflections [[a, alpha c], [c, -a]];
    either sends (alpha, 0, 1) to (a^2 + alpha c^2)(alpha, 0, 1) = (alpha, 0, 1).
    """
    al, t = alpha.alpha_rep, as_fraction(t)
    den = 1 + al * t * t
    a, c = (1 - al * t * t) / den, 2 * t / den
    if reflect:
        return PGL2Elt(a, al * c, c, -a)
    return PGL2Elt(a, -al * c, c, a)
