"""Sweep the closed-form distance against the adaptive oracle.

    python3 scripts/closed_form_vs_oracle.py --pairs 200 --primes 3 5 7
"""
import argparse

from padic_discs.config import SweepConfig
from padic_discs.experiments import closed_form_vs_oracle

ap = argparse.ArgumentParser()
ap.add_argument("--pairs", type=int, default=SweepConfig.pairs_per_class)
ap.add_argument("--primes", type=int, nargs="+", default=list(SweepConfig.primes))
ap.add_argument("--seed", type=int, default=SweepConfig.seed)
args = ap.parse_args()

out = closed_form_vs_oracle(SweepConfig(tuple(args.primes), args.pairs, args.seed))
print(("PASS " if out.passed else "FAIL ") + out.summary())
for f in out.failures[:10]:
    print("  mismatch:", f)
