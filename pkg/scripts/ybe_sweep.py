"""Check the Yang-Baxter equation over random admissible shift triples.

    python scripts/ybe_sweep.py --weights 1/2,1 --samples 5 --seed 31
"""
import argparse
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from yangtwist.evaluation import EvalRep
from yangtwist.exact import format_rational, parse_rational
from yangtwist.rmatrix import check_ybe
from yangtwist.sampling import SampleConfig, delta_triples


@dataclass(frozen=True)
class SweepConfig:
    weights: tuple = (Fraction(1, 2), Fraction(1))
    samples: int = 5
    seed: int = 31
    method: str = "gauss"


def run(cfg: SweepConfig) -> bool:
    ok = True
    triples = delta_triples(SampleConfig(seed=cfg.seed, count=cfg.samples))
    for lams in product(cfg.weights, repeat=3):
        start = time.perf_counter()
        passed = 0
        for deltas in triples:
            reps = [EvalRep.make(lam, d, 1) for lam, d in zip(lams, deltas)]
            passed += check_ybe(*reps, method=cfg.method).passed
        dim = 1
        for lam in lams:
            dim *= int(2 * lam) + 1
        label = ",".join(format_rational(x) for x in lams)
        print(f"lambda=({label})  dim {dim:3d}  {passed}/{len(triples)} pass  "
              f"{time.perf_counter() - start:.2f}s")
        ok &= passed == len(triples)
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--weights", default="1/2,1")
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--seed", type=int, default=31)
    ap.add_argument("--method", choices=("gauss", "twist", "twist_hat"), default="gauss")
    a = ap.parse_args()
    cfg = SweepConfig(tuple(parse_rational(w) for w in a.weights.split(",")),
                      a.samples, a.seed, a.method)
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
