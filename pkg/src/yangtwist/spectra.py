"""Where twists and R-matrices exist: reducibility, predicted pole sets, scans.

Values are reported in units of ``(delta1 - delta2) / eta``.  Only
finite-dimensional factors are covered.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, Optional

from .evaluation import EvalRep
from .exact import PoleError, as_scalar, format_rational
from .report import CheckReport
from .twist import TwistParams, TwistVariant, build_twist


class UnsupportedRepError(ValueError):
    pass


def _require_finite(p: TwistParams):
    if not (p.rep1.finite and p.rep2.finite):
        raise UnsupportedRepError("reducibility is only characterized for "
                                  "finite-dimensional factors")


@dataclass(frozen=True)
class Reducibility:
    reducible: bool
    j: Optional[int] = None
    sign: Optional[int] = None  # +1: (d1-d2)/eta hits the value, -1: (d2-d1)/eta does

    def __bool__(self):
        return self.reducible


def is_reducible(p: TwistParams) -> Reducibility:
    """``+-(d1 - d2)/eta = lam1 + lam2 - j + 1`` for an integer ``0 < j <= min(2 lam1, 2 lam2)``."""
    _require_finite(p)
    z = p.d / p.eta
    top = int(min(2 * p.lam1, 2 * p.lam2))
    for j in range(1, top + 1):
        val = p.lam1 + p.lam2 - j + 1
        if z == val:
            return Reducibility(True, j, +1)
        if -z == val:
            return Reducibility(True, j, -1)
    return Reducibility(False)


def f12_pole_set(lam1, lam2) -> FrozenSet[Fraction]:
    """Values of ``(d1-d2)/eta`` at which ``F_12`` has a pole.

    ``{-lam1-lam2+1, ..., lam1+lam2-1}`` in unit steps; empty when one factor
    is trivial, since then no lowering term reaches the denominators.
    """
    lam1, lam2 = as_scalar(lam1), as_scalar(lam2)
    if lam1 == 0 or lam2 == 0:
        return frozenset()
    lo = -lam1 - lam2 + 1
    count = int(2 * lam1 + 2 * lam2 - 1)
    return frozenset(lo + i for i in range(count))


def f12_inverse_pole_set(lam1, lam2) -> FrozenSet[Fraction]:
    """Values at which ``F_12^{-1}`` has a pole: ``lam1 + lam2 - j + 1``, ``1 <= j <= min(2 lam1, 2 lam2)``.

    This is the positive branch of the reducibility condition only.
    """
    lam1, lam2 = as_scalar(lam1), as_scalar(lam2)
    top = int(min(2 * lam1, 2 * lam2))
    return frozenset(lam1 + lam2 - j + 1 for j in range(1, top + 1))


@dataclass(frozen=True)
class ExistenceProfile:
    reducible: bool
    witness_j: Optional[int]
    f12_pole_set: FrozenSet[Fraction]
    f12_inv_ok: bool
    f12_inv_pole_set: FrozenSet[Fraction] = field(default_factory=frozenset)

    def to_json(self) -> dict:
        return {"reducible": self.reducible, "witness_j": self.witness_j,
                "f12_pole_set": [format_rational(x) for x in sorted(self.f12_pole_set)],
                "f12_inv_ok": self.f12_inv_ok,
                "f12_inv_pole_set": [format_rational(x)
                                     for x in sorted(self.f12_inv_pole_set)]}


def existence_profile(p: TwistParams) -> ExistenceProfile:
    red = is_reducible(p)
    return ExistenceProfile(red.reducible, red.j, f12_pole_set(p.lam1, p.lam2),
                            not red.reducible, f12_inverse_pole_set(p.lam1, p.lam2))


def q_cancelled_factors(p: TwistParams, l: int, k: int):
    """Reduced form of ``q_{lk}`` as (numerator args, denominator args) of ``g``.

    ``q_{lk} = prod_{j=1}^{min(k, 2 lam1 - l)} g(k-l-j) / g(j-1-2 lam1)``.
    """
    _require_finite(p)
    top = min(k, int(2 * p.lam1) - l)
    num = [Fraction(k - l - j) for j in range(1, top + 1)]
    den = [j - 1 - 2 * p.lam1 for j in range(1, top + 1)]
    return num, den


def _builds(p: TwistParams, direction: str) -> bool:
    try:
        build_twist(p, TwistVariant("F", direction))
    except PoleError:
        return False
    return True


def scan_poles(lambda1, lambda2, eta, candidates: Iterable) -> CheckReport:
    """Attempt ``F_12`` and ``F_12^{-1}`` at each candidate ``(d1-d2)/eta``.

    A candidate is consistent when ``F_12`` fails exactly on the predicted pole
    set, ``F_12^{-1}`` fails exactly on its predicted set, and ``F_12^{-1}``
    exists whenever the tensor product is irreducible.
    """
    lam1, lam2, eta = as_scalar(lambda1), as_scalar(lambda2), as_scalar(eta)
    poles = f12_pole_set(lam1, lam2)
    inv_poles = f12_inverse_pole_set(lam1, lam2)
    rows = []
    for c in candidates:
        c = as_scalar(c)
        p = TwistParams(EvalRep.make(lam1, c * eta, eta), EvalRep.make(lam2, 0, eta))
        red = is_reducible(p).reducible
        built, inv_built = _builds(p, "forward"), _builds(p, "inverse")
        pred_pole, pred_inv_pole = c in poles, c in inv_poles
        ok = (built == (not pred_pole) and inv_built == (not pred_inv_pole)
              and (red or inv_built))
        rows.append({"value": format_rational(c), "f12_built": built,
                     "f12_inv_built": inv_built, "predicted_f12_pole": pred_pole,
                     "predicted_f12_inv_pole": pred_inv_pole,
                     "predicted_reducible": red, "consistent": ok})
    bad = next((r for r in rows if not r["consistent"]), None)
    params = {"lambda1": format_rational(lam1), "lambda2": format_rational(lam2),
              "eta": format_rational(eta)}
    return CheckReport("pole_scan", bad is None, bad, params, {"candidates": rows})
