"""Seeded random parameters that stay off every pole and reducibility point.

For finite-dimensional factors all singular values of ``(delta1 - delta2)/eta``
are half-integers, so any difference whose reduced denominator is 3, 5 or 7
is generic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

GENERIC_DENOMINATORS = (3, 5, 7)


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 20240611
    count: int = 5
    spread: int = 4  # numerators drawn from [-spread*den, spread*den]


def _generic(rng: random.Random, spread: int) -> Fraction:
    den = rng.choice(GENERIC_DENOMINATORS)
    while True:
        x = Fraction(rng.randint(-spread * den, spread * den), den)
        if x.denominator == den:
            return x


def is_generic(z: Fraction) -> bool:
    """``True`` when ``z`` is not a half-integer."""
    return (2 * Fraction(z)).denominator != 1


def delta_pairs(cfg: SampleConfig = SampleConfig()) -> List[Tuple[Fraction, Fraction]]:
    """``(delta1, delta2)`` pairs at ``eta = 1`` with a generic difference."""
    rng = random.Random(cfg.seed)
    out = []
    for _ in range(cfg.count):
        d2 = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
        out.append((d2 + _generic(rng, cfg.spread), d2))
    return out


def delta_triples(cfg: SampleConfig = SampleConfig()) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """Three shifts whose pairwise differences are all generic."""
    rng = random.Random(cfg.seed + 1)
    out = []
    while len(out) < cfg.count:
        t = tuple(_generic(rng, cfg.spread) for _ in range(3))
        if all(is_generic(t[i] - t[j]) for i, j in ((0, 1), (0, 2), (1, 2))):
            out.append(t)
    return out


def scaled_samples(cfg: SampleConfig = SampleConfig()) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """``(delta1, delta2, eta)`` with ``eta`` a random nonzero rational and generic ``d/eta``."""
    rng = random.Random(cfg.seed + 2)
    out = []
    for _ in range(cfg.count):
        eta = Fraction(rng.choice((-3, -2, -1, 1, 2, 3, 5)), rng.choice((1, 2, 3)))
        d2 = Fraction(rng.randint(-5, 5), rng.choice((1, 2, 4)))
        out.append((d2 + eta * _generic(rng, cfg.spread), d2, eta))
    return out
