"""The form Q(x, y, z) = xz - y^2, its polar form and the adjoint action.

Vectors are plain 3-tuples of Fractions.  The adjoint action of PGL(2) is
realized on symmetric matrices [[x, y], [y, z]], whose determinant is Q:
g acts by S -> g S g^T / det(g), which lands in SO(Q).  The isometry action
on the discs drops the 1/det(g) and is simply S -> g S g^T.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import ChartFailure, NotInSOQ, SingularMatrix, ZeroVector
from .padic import as_fraction, square_class

Vec3 = Tuple[Fraction, Fraction, Fraction]
Mat3 = Tuple[Vec3, Vec3, Vec3]

# Gram matrix of 2Q in the standard basis.
GRAM = ((Fraction(0), Fraction(0), Fraction(1)),
        (Fraction(0), Fraction(-2), Fraction(0)),
        (Fraction(1), Fraction(0), Fraction(0)))


def vec(x, y, z) -> Vec3:
    return (as_fraction(x), as_fraction(y), as_fraction(z))


def parse_vec(s: str) -> Vec3:
    parts = s.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'x,y,z', got {s!r}")
    return vec(*(Fraction(t.strip()) for t in parts))


def format_vec(v) -> str:
    from .padic import format_rational
    return ",".join(format_rational(c) for c in v)


def scale(c, v: Vec3) -> Vec3:
    c = as_fraction(c)
    return (c * v[0], c * v[1], c * v[2])


def add(v: Vec3, w: Vec3) -> Vec3:
    return (v[0] + w[0], v[1] + w[1], v[2] + w[2])


def is_zero(v) -> bool:
    return all(c == 0 for c in v)


def proportional(v, w) -> bool:
    return (v[0] * w[1] == v[1] * w[0] and v[0] * w[2] == v[2] * w[0]
            and v[1] * w[2] == v[2] * w[1])


def Q(v) -> Fraction:
    return v[0] * v[2] - v[1] * v[1]


def Bpolar(v, w) -> Fraction:
    """Polar form; Bpolar(v, v) = 2 Q(v)."""
    return v[0] * w[2] + w[0] * v[2] - 2 * v[1] * w[1]


def pole(v, w) -> Vec3:
    """A nonzero u with Bpolar(u, v) = Bpolar(u, w) = 0 (v, w independent)."""
    # B(u, v) = u . (v2, -2 v1, v0); take the cross product of the two covectors.
    a = (v[2], -2 * v[1], v[0])
    b = (w[2], -2 * w[1], w[0])
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


# ---------------------------------------------------------------------------
# matrices


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
                 for i in range(3))


def mat_vec(m: Mat3, v) -> Vec3:
    return tuple(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3))


def transpose(m: Mat3) -> Mat3:
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))


def det3(m: Mat3) -> Fraction:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def mat_inv(m: Mat3) -> Mat3:
    d = det3(m)
    if d == 0:
        raise SingularMatrix("singular 3x3 matrix")
    cof = [[(m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
             - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]) for j in range(3)]
           for i in range(3)]
    return tuple(tuple(cof[i][j] / d for j in range(3)) for i in range(3))


def identity3() -> Mat3:
    one, zero = Fraction(1), Fraction(0)
    return ((one, zero, zero), (zero, one, zero), (zero, zero, one))


@dataclass(frozen=True)
class SO3Elt:
    """A 3x3 rational matrix M with M^T P M = P (P the Gram matrix of 2Q)
    and det M = 1.  Checked on construction."""

    m: Mat3

    def __post_init__(self):
        m = tuple(tuple(as_fraction(c) for c in row) for row in self.m)
        object.__setattr__(self, "m", m)
        if mat_mul(transpose(m), mat_mul(GRAM, m)) != GRAM or det3(m) != 1:
            raise NotInSOQ("matrix does not preserve Q with determinant 1")

    def __matmul__(self, other):
        if isinstance(other, SO3Elt):
            return SO3Elt(mat_mul(self.m, other.m))
        return mat_vec(self.m, other)

    def inverse(self) -> "SO3Elt":
        return SO3Elt(mat_inv(self.m))

    @classmethod
    def identity(cls) -> "SO3Elt":
        return cls(identity3())


@dataclass(frozen=True)
class PGL2Elt:
    """[[a, b], [c, d]] up to a nonzero scalar."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for k in "abcd":
            object.__setattr__(self, k, as_fraction(getattr(self, k)))
        if self.det == 0:
            raise SingularMatrix("determinant is zero")

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: "PGL2Elt") -> "PGL2Elt":
        return PGL2Elt(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                       self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def inverse(self) -> "PGL2Elt":
        return PGL2Elt(self.d, -self.b, -self.c, self.a)

    def apply(self, pair):
        """Linear action on column vectors (a, b) of Q_p^2."""
        u, w = pair
        return (self.a * u + self.b * w, self.c * u + self.d * w)

    def same_class(self, o: "PGL2Elt") -> bool:
        mine, theirs = (self.a, self.b, self.c, self.d), (o.a, o.b, o.c, o.d)
        k = next(i for i in range(4) if mine[i] != 0)
        if theirs[k] == 0:
            return False
        r = theirs[k] / mine[k]
        return all(theirs[i] == r * mine[i] for i in range(4))

    @classmethod
    def identity(cls) -> "PGL2Elt":
        return cls(1, 0, 0, 1)

    @classmethod
    def diag(cls, x, y=1) -> "PGL2Elt":
        return cls(x, 0, 0, y)


def _congruence(g: PGL2Elt, v) -> Vec3:
    """g S g^T for S = [[x, y], [y, z]]."""
    x, y, z = v
    a, b, c, d = g.a, g.b, g.c, g.d
    return (a * a * x + 2 * a * b * y + b * b * z,
            a * c * x + (a * d + b * c) * y + b * d * z,
            c * c * x + 2 * c * d * y + d * d * z)


def adjoint(g: PGL2Elt) -> SO3Elt:
    """Matrix of S -> g S g^T / det(g) on (x, y, z)."""
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    cols = [scale(1 / g.det, _congruence(g, vec(*e))) for e in basis]
    return SO3Elt(tuple(tuple(cols[j][i] for j in range(3)) for i in range(3)))


def isom_action(g: PGL2Elt, v) -> Vec3:
    """det(g) Ad(g) v, i.e. S -> g S g^T; Q scales by det(g)^2."""
    return _congruence(g, v)


def d_alpha(alpha) -> SO3Elt:
    """diag(alpha, 1, 1/alpha) = Ad(diag(alpha, 1))."""
    a = as_fraction(alpha)
    z = Fraction(0)
    return SO3Elt(((a, z, z), (z, Fraction(1), z), (z, z, 1 / a)))


def n_plus(w) -> SO3Elt:
    """Stabilizer-of-(1,0,0) shape [[1, 2w, w^2], [0, 1, w], [0, 0, 1]]."""
    w = as_fraction(w)
    o, z = Fraction(1), Fraction(0)
    return SO3Elt(((o, 2 * w, w * w), (z, o, w), (z, z, o)))


def n_minus(v) -> SO3Elt:
    """[[1, 0, 0], [v, 1, 0], [v^2, 2v, 1]]."""
    v = as_fraction(v)
    o, z = Fraction(1), Fraction(0)
    return SO3Elt(((o, z, z), (v, o, z), (v * v, 2 * v, o)))


def h_torus(x) -> SO3Elt:
    return d_alpha(x)


def is_n_plus(m: SO3Elt) -> bool:
    (a, b, c), (d, e, f), (g, h, i) = m.m
    return (a == e == i == 1 and d == g == h == 0 and b == 2 * f and c == f * f)


def is_n_minus(m: SO3Elt) -> bool:
    (a, b, c), (d, e, f), (g, h, i) = m.m
    return (a == e == i == 1 and b == c == f == 0 and h == 2 * d and g == d * d)


def is_h_torus(m: SO3Elt) -> bool:
    (a, b, c), (d, e, f), (g, h, i) = m.m
    return b == c == d == f == g == h == 0 and e == 1 and a * i == 1


def iwasawa_decompose(m: SO3Elt):
    """Factor m = n_minus * h * n_plus.

    Follows the orbit argument: match the image of v0 = (1, 0, 0) with
    n_minus(v) h(x) v0 = (x, v x, v^2 x), then the remaining factor fixes v0.
    Raises ChartFailure when m(v0) has vanishing first coordinate.
    """
    if not isinstance(m, SO3Elt):
        m = SO3Elt(m)
    x0, x1, _ = (m.m[0][0], m.m[1][0], m.m[2][0])
    if x0 == 0:
        raise ChartFailure("m(v0) has zero first coordinate; outside the big cell")
    nm, h = n_minus(x1 / x0), h_torus(x0)
    np_ = (nm @ h).inverse() @ m
    assert is_n_plus(np_)
    return nm, h, np_


# ---------------------------------------------------------------------------
# semi-cones


class NotIsotropic:
    """Marker returned by ``semicone_classify`` for anisotropic vectors."""

    def __repr__(self):
        return "NotIsotropic"


NOT_ISOTROPIC = NotIsotropic()


def semicone_classify(v, ctx):
    """The class b such that both outer coordinates lie in b or are 0."""
    if is_zero(v):
        raise ZeroVector("zero vector")
    if Q(v) != 0:
        return NOT_ISOTROPIC
    x, _, z = v
    return square_class(x if x != 0 else z, ctx)
