"""Print a configuration where two circles on a long line meet in four points.

The four points come in two pairs, each pair swapped by the reflection in the
pole of the centres' line.  Every point is checked on both circles exactly.
"""
import argparse

from padic_discs import disc, geometry
from padic_discs.classes import AlphaClass
from padic_discs.config import CircleConfig
from padic_discs.experiments import circle_intersections
from padic_discs.sampling import random_circle_configuration, rng_for

ap = argparse.ArgumentParser()
ap.add_argument("-p", type=int, default=CircleConfig.p)
ap.add_argument("--alpha", default=CircleConfig.alpha)
ap.add_argument("--seed", type=int, default=CircleConfig.seed)
args = ap.parse_args()
cfg = CircleConfig(args.p, args.alpha, CircleConfig.configurations, args.seed)

out = circle_intersections(cfg)
print(out.summary().split("; first")[0])

a = AlphaClass.from_label(cfg.alpha, cfg.p)
rng = rng_for(f"circles:{cfg.seed}")
for _ in range(cfg.configurations):
    c1, r1, c2, r2, _w = random_circle_configuration(rng, a, cfg.p)
    res = disc.circle_intersection(disc.DiscPoint.of(c1, a), r1, disc.DiscPoint.of(c2, a), r2, cfg.p)
    if len(res.points) > 2:
        print(f"c1 = {geometry.format_vec(c1)}  r1 = {r1}")
        print(f"c2 = {geometry.format_vec(c2)}  r2 = {r2}")
        for q in res.points:
            on = disc.circle_contains(c1, r1, q, cfg.p) and disc.circle_contains(c2, r2, q, cfg.p)
            print(f"  q + {q.sign}*sqrt({q.m})*u, q = {geometry.format_vec(q.q)}, on both circles: {on}")
        break
