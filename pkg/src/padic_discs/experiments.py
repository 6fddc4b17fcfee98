"""Desk-scale experiments behind the acceptance checks and scripts/.

Each function returns an Outcome: a verdict plus the numbers worth printing.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import classes, disc, geometry, oracle, padic, tree, triangle
from .config import (CircleConfig, DualityConfig, IsometryConfig, IwasawaConfig, MetricConfig,
                     OrbitConfig, StabilizerConfig, SweepConfig, TreeConfig, TriangleConfig)
from .sampling import (random_circle_configuration, random_disc_pair, random_disc_point,
                       random_pgl2, random_rational, random_so3, random_unit, rng_for)
from .verify import random_triangle_point


@dataclass
class Outcome:
    passed: bool
    cases: int = 0
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def fail(self, detail):
        self.failures.append(detail)
        self.passed = False

    def summary(self) -> str:
        s = f"{self.cases} cases"
        if self.stats:
            s += ", " + ", ".join(f"{k}={v}" for k, v in self.stats.items())
        if self.failures:
            s += f"; first failure: {self.failures[0]}"
        return s


def closed_form_vs_oracle(cfg: SweepConfig = SweepConfig()) -> Outcome:
    out, t0 = Outcome(True), time.perf_counter()
    kinds = {"long": 0, "short": 0}
    for p in cfg.primes:
        for a in classes.admissible_classes(p):
            rng = rng_for(f"sweep:{cfg.seed}:{p}:{a.label}")
            for _ in range(cfg.pairs_per_class):
                v, w = random_disc_pair(rng, a, p)
                d = disc.hilbert_distance(v, w, p, a)
                o = oracle.oracle_distance_stable(v, w, a, p)
                out.cases += 1
                if not geometry.proportional(v, w):
                    kinds[disc.classify_line(v, w, p).tag] += 1
                if d != o.value:
                    out.fail((p, a.label, v, w, d, o.value))
    out.stats = dict(kinds, seconds=round(time.perf_counter() - t0, 1))
    return out


def spot_values() -> Outcome:
    out = Outcome(True)
    a = classes.AlphaClass.of(2, 5)
    for w, want in (((50, 0, 1), Fraction(3)), ((-18, 5, 11), Fraction(1, 4))):
        d = disc.hilbert_distance((2, 0, 1), w, 5, a)
        o = oracle.oracle_distance_stable((2, 0, 1), w, a, 5).value
        out.cases += 1
        if not d == o == want:
            out.fail((w, d, o, want))
    return out


def isometry_invariance(cfg: IsometryConfig = IsometryConfig()) -> Outcome:
    out, p = Outcome(True), cfg.p
    rng = rng_for(f"isometry:{cfg.seed}")
    alphas = classes.admissible_classes(p)
    pairs = []
    for i in range(cfg.pairs):
        a = alphas[i % len(alphas)]
        pairs.append((a, *random_disc_pair(rng, a, p)))
    for _ in range(cfg.group_elements):
        g = random_pgl2(rng, p)
        for a, v, w in pairs:
            out.cases += 1
            d = disc.hilbert_distance(v, w, p, a)
            gv, gw = geometry.isom_action(g, v), geometry.isom_action(g, w)
            if disc.hilbert_distance(gv, gw, p, a) != d:
                out.fail((a.label, v, w, g))
    return out


def metric_axioms(cfg: MetricConfig = MetricConfig()) -> Outcome:
    out = Outcome(True)
    ultra = 0
    for p in cfg.primes:
        rng = rng_for(f"metric:{cfg.seed}:{p}")
        alphas = classes.admissible_classes(p)
        for i in range(cfg.triples):
            a = alphas[i % len(alphas)]
            x, y = random_disc_pair(rng, a, p)
            z = geometry.isom_action(random_pgl2(rng, p, 1), y) if i % 2 else random_disc_point(rng, a, p)
            if not disc.in_disc(z, a, p):
                z = random_disc_point(rng, a, p)
            d = lambda u, v: disc.hilbert_distance(u, v, p, a)
            dxy, dxz, dzy = d(x, y), d(x, z), d(z, y)
            out.cases += 1
            same = disc.SpherePoint(x, a) == disc.SpherePoint(y, a)
            ok = dxy == d(y, x) and d(x, x) == 0 and (dxy == 0) == same
            ok = ok and dxy <= dxz + dzy
            if dxz <= 1 and dzy <= 1:
                ultra += 1
                ok = ok and dxy <= max(dxz, dzy)
            if not ok:
                out.fail((p, a.label, x, y, z))
    out.stats = {"ultrametric_triples": ultra}
    return out


def _even_alphas(p):
    return [a for a in classes.admissible_classes(p) if a.even_valuation]


def tree_quasi_isometry(cfg: TreeConfig = TreeConfig()) -> Outcome:
    out = Outcome(True)
    loci = 0
    for p in cfg.primes:
        for a in _even_alphas(p):
            rng = rng_for(f"tree:{cfg.seed}:{p}:{a.label}")
            for _ in range(cfg.pairs):
                v, w = random_disc_pair(rng, a, p)
                d = disc.hilbert_distance(v, w, p, a)
                pv = tree.project(disc.DiscPoint.of(v, a), p)
                pw = tree.project(disc.DiscPoint.of(w, a), p)
                out.cases += 1
                if tree.tree_distance(pv, pw, p) != d // 2:
                    out.fail(("floor", p, a.label, v, w, d))
                if d <= 1:
                    loci += 1
                    if pv != pw:
                        out.fail(("locus", p, a.label, v, w))
            for _ in range(cfg.covariance_cases):
                v = random_disc_point(rng, a, p)
                g = random_pgl2(rng, p)
                out.cases += 1
                lhs = tree.project(disc.DiscPoint.of(geometry.isom_action(g, v), a), p)
                if lhs != tree.act(g, tree.project(disc.DiscPoint.of(v, a), p), p):
                    out.fail(("covariance", p, a.label, v, g))
    out.stats = {"locus_pairs": loci}
    return out


def long_lines_to_geodesics(cfg: TreeConfig = TreeConfig()) -> Outcome:
    out = Outcome(True)
    for p in cfg.primes:
        for a in _even_alphas(p):
            rng = rng_for(f"geodesic:{cfg.seed}:{p}:{a.label}")
            al = a.alpha_rep
            for _ in range(cfg.long_lines):
                g = random_pgl2(rng, p)
                ends = (tree.BoundaryPoint.of(g.a, g.c), tree.BoundaryPoint.of(g.b, g.d))
                pts = [geometry.isom_action(g, (al * x * x, 0, 1))
                       for x in (random_rational(rng, p, 3, 9) for _ in range(cfg.points_per_line))]
                line = disc.classify_line(disc.DiscPoint.of(pts[0], a), disc.DiscPoint.of(pts[1], a), p)
                got = tree.boundary_of_long_line(line) if line.is_long else ()
                out.cases += 1
                if set(got) != set(ends):
                    out.fail(("ends", p, g, got, ends))
                    continue
                geo = set(tree.geodesic_vertices(ends[0], ends[1], range(-12, 13), p))
                for x in pts:
                    if tree.project(disc.DiscPoint.of(x, a), p) not in geo:
                        out.fail(("off geodesic", p, g, x))
    return out


def triangle_checks(cfg: TriangleConfig = TriangleConfig()) -> Outcome:
    out = Outcome(True)
    hexed = 0
    for p in cfg.primes:
        rng = rng_for(f"triangle:{cfg.seed}:{p}")
        for i in range(cfg.pairs):
            P1 = random_triangle_point(rng, p)
            if i % 4 == 0:
                P2 = triangle.in_triangle((Fraction(p) ** P1.n1 * random_unit(rng, p, 9) ** 2, 1,
                                           Fraction(p) ** P1.n2 * random_unit(rng, p, 9) ** 2), p)
            else:
                P2 = random_triangle_point(rng, p)
            d = triangle.triangle_distance(P1, P2, p)
            out.cases += 1
            if d != triangle.triangle_oracle(P1, P2, p):
                out.fail(("oracle", p, P1.rep, P2.rep))
            if d > 1:
                hexed += 1
                if triangle.hex_distance(triangle.hex_project(P1), triangle.hex_project(P2)) != d - 1:
                    out.fail(("hex", p, P1.rep, P2.rep))
        center = triangle.in_triangle((1, 1, 1), p)
        image = set()
        for n1 in range(-4, 5):
            for n2 in range(-4, 5):
                P = triangle.in_triangle((Fraction(p) ** n1, 1, Fraction(p) ** n2), p)
                if triangle.triangle_distance(center, P, p) <= 2:
                    image.add(triangle.hex_project(P))
        want = {h for h in triangle.hex_ball(triangle.HexPoint(0, 0), 1)}
        if image != want or len(image) != 7:
            out.fail(("figure", p, len(image)))
    out.stats = {"hex_pairs": hexed}
    return out


def class_counts(primes=(3, 5, 7, 11, 13)) -> Outcome:
    out = Outcome(True)
    for p in (2,) + tuple(primes):
        want = (8, 7) if p == 2 else (4, 3)
        got = (len(padic.all_square_classes(p)), len(classes.admissible_classes(p)))
        out.cases += 1
        if got != want:
            out.fail((p, got))
    for p in primes:
        minus_one_square = padic.is_square(-1, p)
        for c in padic.all_square_classes(p):
            # one sheet exactly when -1 lies in the class
            want = 1 if c.contains(-1) else 2
            out.cases += 1
            if classes.hyperboloid_sheets(c, p) != want:
                out.fail((p, c.label))
            if minus_one_square and c.rep == 1 and want != 1:
                out.fail((p, "square class"))
    return out


def orbit_structure(cfg: OrbitConfig = OrbitConfig()) -> Outcome:
    out = Outcome(True)
    for p in cfg.primes:
        for a in classes.admissible_classes(p):
            rng = rng_for(f"orbit:{cfg.seed}:{p}:{a.label}")
            labels = set()
            for _ in range(cfg.points):
                v = disc.DiscPoint.of(random_disc_point(rng, a, p), a)
                labels.add(disc.orbit_label(v, p))
            out.cases += 1
            want = 2 if classes.minus_one_in_K(a, p) else 1
            out.stats[f"{p}:{a.label}"] = len(labels)
            if len(labels) != want:
                out.fail((p, a.label, len(labels), want))
    return out


def iwasawa_round_trip(cfg: IwasawaConfig = IwasawaConfig()) -> Outcome:
    out = Outcome(True)
    charts = 0
    for p in cfg.primes:
        rng = rng_for(f"iwasawa:{cfg.seed}:{p}")
        done = 0
        while done < cfg.words:
            m = random_so3(rng, p, rng.randint(1, 5))
            try:
                nm, h, np_ = geometry.iwasawa_decompose(m)
            except geometry.ChartFailure:
                charts += 1
                continue
            done += 1
            out.cases += 1
            if not ((nm @ h @ np_).m == m.m and geometry.is_n_minus(nm)
                    and geometry.is_h_torus(h) and geometry.is_n_plus(np_)):
                out.fail((p, m.m))
    out.stats = {"chart_failures_skipped": charts}
    return out


def _stable_dual_check(v, a, p, start=2, cap=6):
    prev = oracle.oracle_in_dual_check(v, a, start, p)
    for d in range(start + 1, cap + 1):
        cur = oracle.oracle_in_dual_check(v, a, d, p)
        if cur == prev:
            return cur, d
        prev = cur
    return prev, cap


def duality_sampling(cfg: DualityConfig = DualityConfig()) -> Outcome:
    out = Outcome(True)
    inside = 0
    for p in cfg.primes:
        for a in classes.admissible_classes(p):
            rng = rng_for(f"duality:{cfg.seed}:{p}:{a.label}")
            for i in range(cfg.vectors):
                if i % 2:
                    v = random_disc_point(rng, a, p)
                    if i % 4 == 1:
                        v = geometry.scale(random_rational(rng, p, 2, 9), v)
                else:
                    v = tuple(random_rational(rng, p, 2, 9) * rng.choice([0, 1, 1, 1]) for _ in range(3))
                    if geometry.is_zero(v):
                        v = (Fraction(1), Fraction(0), Fraction(0))
                want = disc.in_disc(v, a, p)
                inside += want
                got, _ = _stable_dual_check(v, a, p)
                out.cases += 1
                if got != want:
                    out.fail((p, a.label, v, got, want))
    out.stats = {"in_disc": inside}
    return out


def circle_intersections(cfg: CircleConfig = CircleConfig()) -> Outcome:
    out = Outcome(True)
    p = cfg.p
    a = classes.AlphaClass.from_label(cfg.alpha, p)
    rng = rng_for(f"circles:{cfg.seed}")
    sizes = {}
    for _ in range(cfg.configurations):
        c1, r1, c2, r2, w = random_circle_configuration(rng, a, p)
        res = disc.circle_intersection(disc.DiscPoint.of(c1, a), r1, disc.DiscPoint.of(c2, a), r2, p)
        n = len(res.points)
        sizes[n] = sizes.get(n, 0) + 1
        out.cases += 1
        if n > 2:
            out.fail(("more than two points", c1, r1, c2, r2, n))
        for q in res.points:
            if not (disc.circle_contains(c1, r1, q, p) and disc.circle_contains(c2, r2, q, p)):
                out.fail(("not on both circles", c1, c2, q))
        if n == 2 and {q.swapped() for q in res.points} != set(res.points):
            out.fail(("involution", c1, c2))
        u = res.pole
        for q in res.rational_points(a, p):
            img = disc.reflection(u, q)
            if not any(disc.SpherePoint(img, a) == disc.SpherePoint(s, a)
                       for s in res.rational_points(a, p)):
                out.fail(("reflection leaves the set", q))
        if not any(disc.SpherePoint(w, a) == disc.SpherePoint(s, a) for s in res.rational_points(a, p)):
            out.fail(("witness missing", c1, c2, w))
    out.stats = {f"{k}_points": v for k, v in sorted(sizes.items())}
    return out


def stabilizer_integrality(cfg: StabilizerConfig = StabilizerConfig()) -> Outcome:
    out = Outcome(True)
    va = None
    for p in cfg.primes:
        for a in _even_alphas(p):
            rng = rng_for(f"stab:{cfg.seed}:{p}:{a.label}")
            va = (a.alpha_rep, Fraction(0), Fraction(1))
            for i in range(cfg.elements):
                g = disc.stabilizer_element(a, random_rational(rng, p, 3, 30), i % 2 == 1)
                out.cases += 1
                fixed = geometry.isom_action(g, va) == va
                integral = all(padic.valuation(x, p) >= 0 for x in (g.a, g.b, g.c, g.d) if x != 0)
                if not (fixed and integral):
                    out.fail((p, a.label, g))
    return out
