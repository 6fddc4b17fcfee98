"""Seeded property suites, runnable from the command line.

Each check returns a CheckResult; failures carry the first counterexample.
``distance_fn`` may replace the closed-form distance, which is how the
negative-control test injects a wrong constant.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import classes, disc, geometry, oracle, padic, tree, triangle
from .sampling import (random_disc_pair, random_disc_point, random_pgl2,
                       random_rational, random_so3, random_unit, rng_for)

SUITES = ("padic", "classgroups", "geometry", "disc", "oracle", "tree", "triangle")


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        s = f"[{tag}] {self.name} ({self.cases} cases)"
        return s if self.passed else f"{s}: {self.counterexample}"


@dataclass
class Report:
    suite: str
    seed: int
    p: int
    results: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(not r.passed for r in self.results)

    def as_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "p": self.p,
                "failures": self.failures,
                "checks": [{"name": r.name, "passed": r.passed, "cases": r.cases,
                            "counterexample": r.counterexample} for r in self.results]}


class _Check:
    def __init__(self, name):
        self.name, self.cases, self.bad = name, 0, None

    def __call__(self, ok: bool, detail):
        self.cases += 1
        if not ok and self.bad is None:
            self.bad = detail() if callable(detail) else str(detail)

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.bad is None, self.cases, self.bad)


def _suite_padic(rng, p, n):
    sq, sym, val = _Check("hensel_sqrt squares back"), _Check("hilbert symbol symmetric and bilinear"), _Check("valuation is additive")
    for _ in range(n):
        a, b, c = (random_rational(rng, p) for _ in range(3))
        x = a * a
        N = 20
        r = padic.hensel_sqrt(x, p, N)
        diff = r * r - x
        sq(diff.is_zero or diff.val() >= padic.valuation(x, p) + N - (2 if p == 2 else 0),
           lambda: f"x={x}")
        h = padic.hilbert_symbol
        sym(h(a, b, p) == h(b, a, p) and h(a, b * c, p) == h(a, b, p) * h(a, c, p),
            lambda: f"a={a} b={b} c={c}")
        val(padic.valuation(a * b, p) == padic.valuation(a, p) + padic.valuation(b, p),
            lambda: f"a={a} b={b}")
    return [sq.result(), sym.result(), val.result()]


def _suite_classgroups(rng, p, n):
    counts = _Check("class and admissible counts")
    want = (8, 7) if p == 2 else (4, 3)
    got = (len(padic.all_square_classes(p)), len(classes.admissible_classes(p)))
    counts(got == want, f"got {got}")
    hom = _Check("in_K is an index-2 subgroup containing squares")
    for a in classes.admissible_classes(p):
        seen = set()
        for _ in range(n):
            x, y = random_rational(rng, p), random_rational(rng, p)
            kx, ky = classes.in_K(x, a, p), classes.in_K(y, a, p)
            seen.add(kx)
            hom((kx == ky) == classes.in_K(x * y, a, p) and classes.in_K(x * x, a, p),
                lambda: f"alpha={a} x={x} y={y}")
        hom(seen == {True, False}, f"alpha={a}: one-sided indicator")
    brute = _Check("in_K agrees with alpha x^2 + y^2 search")
    for a in classes.admissible_classes(p):
        reps = {c.label: _represented(c.rep, a.alpha_rep, p) for c in padic.all_square_classes(p)}
        for c in padic.all_square_classes(p):
            brute(reps[c.label] == classes.in_K(c.rep, a, p), f"alpha={a} class={c}")
    return [counts.result(), hom.result(), brute.result()]


def _represented(z, alpha, p) -> bool:
    """Is z = alpha x^2 + y^2 for some nonzero rationals x, y? (small search)"""
    for x in _small_rationals(p):
        rest = z - alpha * x * x
        if rest != 0 and padic.is_square(rest, p):
            return True
    return False


def _small_rationals(p):
    for k in range(-3, 4):
        for n in range(1, 2 * p + 9):
            for d in (1, 3, 5, 7):
                yield Fraction(p) ** k * n / d


def _suite_geometry(rng, p, n):
    hom, iw = _Check("Ad is a homomorphism into SO(Q)"), _Check("Iwasawa round trip and shapes")
    for _ in range(n):
        g, h = random_pgl2(rng, p), random_pgl2(rng, p)
        hom((geometry.adjoint(g) @ geometry.adjoint(h)).m == geometry.adjoint(g @ h).m,
            lambda: f"g={g} h={h}")
        m = random_so3(rng, p)
        try:
            nm, hh, np_ = geometry.iwasawa_decompose(m)
        except geometry.ChartFailure:
            continue
        iw((nm @ hh @ np_).m == m.m and geometry.is_n_minus(nm) and geometry.is_h_torus(hh)
           and geometry.is_n_plus(np_), lambda: f"m={m.m}")
    return [hom.result(), iw.result()]


def _alphas(p):
    return classes.admissible_classes(p)


def _suite_disc(rng, p, n, distance_fn=None):
    dist = distance_fn or (lambda v, w, a: disc.hilbert_distance(v, w, p, a))
    eq, inv, met = (_Check("closed form equals oracle"), _Check("isometry invariance"),
                    _Check("metric axioms"))
    for a in _alphas(p):
        for _ in range(n):
            v, w = random_disc_pair(rng, a, p)
            d = dist(v, w, a)
            o = oracle.oracle_distance_stable(v, w, a, p).value
            eq(d == o, lambda: f"alpha={a} v={geometry.format_vec(v)} w={geometry.format_vec(w)}: {d} != {o}")
            g = random_pgl2(rng, p)
            d2 = dist(geometry.isom_action(g, v), geometry.isom_action(g, w), a)
            inv(d == d2, lambda: f"alpha={a} v={v} w={w} g={g}")
            x = random_disc_point(rng, a, p)
            dvx, dxw = dist(v, x, a), dist(x, w, a)
            ok = d == dist(w, v, a) and d <= dvx + dxw
            if dvx <= 1 and dxw <= 1:
                ok = ok and d <= max(dvx, dxw)
            met(ok, lambda: f"alpha={a} v={v} w={w} x={x}")
    return [eq.result(), inv.result(), met.result()]


def _suite_oracle(rng, p, n):
    dual, samp = _Check("sampled dual test agrees with in_disc"), _Check("sampled oracle never exceeds adaptive oracle")
    depth = 3 if p < 7 else 2
    for a in _alphas(p):
        for _ in range(n):
            v = tuple(random_rational(rng, p, 2, 9) * rng.choice([0, 1, 1]) for _ in range(3))
            if geometry.is_zero(v):
                continue
            dual(oracle.oracle_in_dual_check(v, a, depth, p) == disc.in_disc(v, a, p),
                 lambda: f"alpha={a} v={v}")
            v, w = random_disc_pair(rng, a, p)
            s = oracle.oracle_distance(v, w, a, depth, p).value
            e = oracle.oracle_distance_stable(v, w, a, p).value
            samp(s <= e, lambda: f"alpha={a} v={v} w={w}")
    return [dual.result(), samp.result()]


def _suite_tree(rng, p, n):
    nb = _Check("neighbors are exactly the distance-1 vertices (radius 2)")
    verts, _ = tree.ball(tree.base_vertex(), 2, p)
    want = 1 + (p + 1) + (p + 1) * p
    nb(len(verts) == want, f"{len(verts)} vertices, expected {want}")
    for u in verts:
        ns = tree.neighbors(u, p)
        nb(len(set(ns)) == p + 1 and all(tree.tree_distance(u, w, p) == 1 for w in ns),
           f"u={u}")
        for w in verts:
            if tree.tree_distance(u, w, p) == 1:
                nb(w in ns, f"u={u} w={w}")
    qi, cov = _Check("tree distance is floor(d/2)"), _Check("projection is covariant")
    for a in _alphas(p):
        if not a.even_valuation or p == 2:
            continue
        for _ in range(n):
            v, w = random_disc_pair(rng, a, p)
            pv, pw = tree.project(disc.DiscPoint.of(v, a), p), tree.project(disc.DiscPoint.of(w, a), p)
            d = disc.hilbert_distance(v, w, p, a)
            qi(tree.tree_distance(pv, pw, p) == d // 1 // 2, lambda: f"v={v} w={w}")
            g = random_pgl2(rng, p)
            cov(tree.project(disc.DiscPoint.of(geometry.isom_action(g, v), a), p)
                == tree.act(g, pv, p), lambda: f"v={v} g={g}")
    return [nb.result(), qi.result(), cov.result()]


def random_triangle_point(rng, p, spread: int = 3):
    u1, u2 = random_unit(rng, p, 9), random_unit(rng, p, 9)
    pw = Fraction(p)
    v = (pw ** rng.randint(-spread, spread) * u1 * u1, Fraction(1),
         pw ** rng.randint(-spread, spread) * u2 * u2)
    return triangle.in_triangle(v, p)


def _suite_triangle(rng, p, n):
    eq, hx = _Check("formula equals 3-form oracle"), _Check("hex distance is d - 1")
    for _ in range(n):
        P1, P2 = random_triangle_point(rng, p), random_triangle_point(rng, p)
        if rng.random() < 0.3:
            P2 = triangle.in_triangle((Fraction(p) ** P1.n1 * random_unit(rng, p, 9) ** 2, 1,
                                       Fraction(p) ** P1.n2 * random_unit(rng, p, 9) ** 2), p)
        d = triangle.triangle_distance(P1, P2, p)
        eq(d == triangle.triangle_oracle(P1, P2, p), lambda: f"{P1.rep} {P2.rep}")
        if d > 1:
            hd = triangle.hex_distance(triangle.hex_project(P1), triangle.hex_project(P2))
            hx(hd == d - 1, lambda: f"{P1.rep} {P2.rep}")
    fig = _Check("radius-2 ball around [1:1:1] covers 7 hex points")
    center = triangle.in_triangle((1, 1, 1), p)
    pts = set()
    for n1 in range(-3, 4):
        for n2 in range(-3, 4):
            P = triangle.in_triangle((Fraction(p) ** n1, 1, Fraction(p) ** n2), p)
            if triangle.triangle_distance(center, P, p) <= 2:
                pts.add(triangle.hex_project(P))
    fig(len(pts) == 7, f"{len(pts)} hex points")
    return [eq.result(), hx.result(), fig.result()]


def verify_suite(name: str, seed: int, p: int, cases: int = 50,
                 distance_fn: Callable | None = None) -> list:
    names = SUITES if name == "all" else (name,)
    reports = []
    for s in names:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}")
        rng = rng_for(f"{s}:{seed}:{p}")
        fn = globals()[f"_suite_{s}"]
        if s == "disc":
            if p == 2:
                reports.append(Report(s, seed, p, []))
                continue
            results = fn(rng, p, cases, distance_fn)
        else:
            results = fn(rng, p, cases)
        reports.append(Report(s, seed, p, results))
    return reports
