"""Seeded generators of test data.

Disc points are built from normal forms (alpha s^2, 0, 1) pushed around by
random PGL(2, Q) elements, so membership holds by construction.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .classes import AlphaClass
from .geometry import PGL2Elt, SO3Elt, adjoint, isom_action, n_minus, n_plus, h_torus
from .padic import _p


def rng_for(seed) -> random.Random:
    return random.Random(seed)


def random_unit(rng: random.Random, p: int, height: int = 30) -> Fraction:
    while True:
        n = rng.randint(-height, height)
        if n % p:
            d = rng.randint(1, height)
            if d % p:
                return Fraction(n, d)


def random_rational(rng: random.Random, p: int, vmax: int = 3, height: int = 30) -> Fraction:
    return Fraction(p) ** rng.randint(-vmax, vmax) * random_unit(rng, p, height)


def random_pgl2(rng: random.Random, p: int, vmax: int = 2, height: int = 12) -> PGL2Elt:
    while True:
        ent = [rng.choice([0, 1]) and random_rational(rng, p, vmax, height) or Fraction(0)
               for _ in range(4)]
        if ent[0] * ent[3] - ent[1] * ent[2] != 0:
            return PGL2Elt(*ent)


def near_identity(rng: random.Random, p: int, k: int, height: int = 12) -> PGL2Elt:
    """I + p^k X with X integral-ish; close to the identity when k > 0."""
    while True:
        x = [Fraction(rng.randint(-height, height)) for _ in range(4)]
        pk = Fraction(p) ** k
        g = (1 + pk * x[0], pk * x[1], pk * x[2], 1 + pk * x[3])
        if g[0] * g[3] - g[1] * g[2] != 0:
            return PGL2Elt(*g)


def random_disc_point(rng: random.Random, alpha: AlphaClass, ctx, vmax: int = 2):
    p = _p(ctx)
    s = random_rational(rng, p, vmax, 10)
    v0 = (alpha.alpha_rep * s * s, Fraction(0), Fraction(1))
    return isom_action(random_pgl2(rng, p, vmax), v0)


def random_disc_pair(rng: random.Random, alpha: AlphaClass, ctx):
    """A pair at a random scale: far apart, moderately close, or very close."""
    p = _p(ctx)
    v = random_disc_point(rng, alpha, ctx)
    mode = rng.random()
    if mode < 0.4:
        w = random_disc_point(rng, alpha, ctx)
    else:
        w = isom_action(near_identity(rng, p, rng.randint(0, 3)), v)
    return v, w


def random_so3(rng: random.Random, p: int, length: int = 3) -> SO3Elt:
    """A word in N-, H, N+ and adjoint images."""
    m = SO3Elt.identity()
    for _ in range(length):
        kind = rng.randrange(4)
        if kind == 0:
            m = m @ n_plus(random_rational(rng, p, 2, 9))
        elif kind == 1:
            m = m @ n_minus(random_rational(rng, p, 2, 9))
        elif kind == 2:
            m = m @ h_torus(random_rational(rng, p, 2, 9))
        else:
            m = m @ adjoint(random_pgl2(rng, p))
    return m


def random_circle_configuration(rng: random.Random, alpha: AlphaClass, ctx):
    """Two centres on a rational long line and radii for which a known point
    w lies on both circles.  Returns (c1, r1, c2, r2, w)."""
    from .disc import pair_invariants, stabilizer_element
    from .padic import is_square
    p = _p(ctx)
    al = alpha.alpha_rep
    while True:
        G = random_pgl2(rng, p)
        w = isom_action(G, (al, Fraction(0), Fraction(1)))
        x, y = random_rational(rng, p, 2, 9), random_rational(rng, p, 2, 9)
        if x * x == 1 or y * y == 1:
            continue
        R1 = stabilizer_element(alpha, random_rational(rng, p, 2, 9), rng.random() < 0.5)
        R2 = stabilizer_element(alpha, random_rational(rng, p, 2, 9), rng.random() < 0.5)
        c1 = isom_action(G @ R1, (al * x * x, Fraction(0), Fraction(1)))
        c2 = isom_action(G @ R2, (al * y * y, Fraction(0), Fraction(1)))
        _, delta, _ = pair_invariants(c1, c2)
        if delta == 0 or not is_square(delta, p):
            continue
        return c1, x * x, c2, y * y, w
