"""Run every check suite on the weight grid with seeded generic shifts.

    python scripts/verify_grid.py --weights 1/2,1,3/2,2 --samples 5
"""
import argparse
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from yangtwist.exact import parse_rational
from yangtwist.sampling import SampleConfig, delta_pairs
from yangtwist.suites import SUITES
from yangtwist.twist import TwistParams


@dataclass(frozen=True)
class GridConfig:
    weights: tuple = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))
    samples: int = 5
    seed: int = 7
    suites: tuple = tuple(SUITES)


def run(cfg: GridConfig) -> dict:
    tally = {name: [0, 0] for name in cfg.suites}
    failures = []
    for l1, l2 in product(cfg.weights, cfg.weights):
        for d1, d2 in delta_pairs(SampleConfig(seed=cfg.seed, count=cfg.samples)):
            p = TwistParams.make(l1, l2, d1, d2, 1)
            for name in cfg.suites:
                for rep in SUITES[name](p):
                    tally[name][0] += rep.passed
                    tally[name][1] += 1
                    if not rep.passed:
                        failures.append(rep.to_json())
    return {"tally": {k: f"{a}/{b}" for k, (a, b) in tally.items()}, "failures": failures}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--weights", default="1/2,1,3/2,2")
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--suites", default=",".join(SUITES))
    a = ap.parse_args()
    cfg = GridConfig(tuple(parse_rational(w) for w in a.weights.split(",")), a.samples,
                     a.seed, tuple(a.suites.split(",")))
    out = run(cfg)
    print(json.dumps(out, indent=2, sort_keys=True))
    raise SystemExit(1 if out["failures"] else 0)


if __name__ == "__main__":
    main()
