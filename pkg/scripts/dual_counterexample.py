"""Show that a disc point never lies in the dual of its own disc.

When -1 is in K, every disc point v has another disc point u with
B(u, v) = 0, so u is excluded from the dual by v.  This includes alpha = 1
with -1 not a square.
"""
import argparse

from padic_discs import classes, disc, geometry, padic
from padic_discs.sampling import random_disc_point, rng_for

ap = argparse.ArgumentParser()
ap.add_argument("-p", type=int, default=3)
ap.add_argument("--alpha", default="1")
ap.add_argument("--samples", type=int, default=200)
ap.add_argument("--seed", type=int, default=0)
args = ap.parse_args()
a = classes.AlphaClass.from_label(args.alpha, args.p)
print(f"p={args.p} alpha={a.label} -1 square: {padic.is_square(-1, args.p)}")

u, v = (1, 1, -1), (1, 0, 1)
if args.p == 3 and a.label == "1":
    print(f"u={u} in disc: {disc.in_disc(u, a, 3)}, v={v} in disc: {disc.in_disc(v, a, 3)}, "
          f"B(u, v) = {geometry.Bpolar(u, v)}")

if not classes.minus_one_in_K(a, args.p):
    print("-1 is not in K: no disc point has an orthogonal disc partner")
    raise SystemExit(0)
rng = rng_for(args.seed)
ok = 0
for _ in range(args.samples):
    v = random_disc_point(rng, a, args.p)
    w = disc.dual_disc_witness(v, a, args.p)
    ok += disc.in_disc(w, a, args.p) and geometry.Bpolar(v, w) == 0
print(f"orthogonal disc partner found for {ok}/{args.samples} random disc points")
