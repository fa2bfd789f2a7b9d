"""Tabulate where F_12 and F_12^{-1} fail for a range of weight pairs.

    python scripts/pole_scan_table.py --weights 1/2,1,3/2 --step 1/2
"""
import argparse
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from yangtwist.exact import format_rational, parse_rational
from yangtwist.spectra import scan_poles


@dataclass(frozen=True)
class ScanConfig:
    weights: tuple = (Fraction(1, 2), Fraction(1), Fraction(3, 2))
    step: Fraction = Fraction(1, 2)
    eta: Fraction = Fraction(1)


def run(cfg: ScanConfig) -> bool:
    all_ok = True
    for l1, l2 in product(cfg.weights, cfg.weights):
        top = l1 + l2 + 1
        n = int(2 * top / cfg.step)
        cands = [-top + i * cfg.step for i in range(n + 1)]
        rep = scan_poles(l1, l2, cfg.eta, cands)
        rows = rep.details["candidates"]
        fwd = [r["value"] for r in rows if not r["f12_built"]]
        inv = [r["value"] for r in rows if not r["f12_inv_built"]]
        red = [r["value"] for r in rows if r["predicted_reducible"]]
        print(f"lambda=({format_rational(l1)},{format_rational(l2)})  "
              f"F12 poles {fwd}  F12^-1 poles {inv}  reducible {red}  "
              f"{'consistent' if rep.passed else 'INCONSISTENT'}")
        all_ok &= rep.passed
    return all_ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--weights", default="1/2,1,3/2")
    ap.add_argument("--step", default="1/2")
    ap.add_argument("--eta", default="1")
    a = ap.parse_args()
    cfg = ScanConfig(tuple(parse_rational(w) for w in a.weights.split(",")),
                     parse_rational(a.step), parse_rational(a.eta))
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
