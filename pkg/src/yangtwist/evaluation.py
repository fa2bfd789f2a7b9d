"""Evaluation representations of Y(sl2) and the coproduct on two-fold products.

On ``V_lam(delta)`` the generators act as::

    A(u) = u - delta + eta H     B(u) = eta F
    C(u) = eta E                 D(u) = u - delta - eta H

and the coproduct used throughout is::

    Delta A = A(x)A + C(x)B      Delta B = B(x)A + D(x)B
    Delta C = A(x)C + C(x)D      Delta D = B(x)C + D(x)D
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .exact import SpectralPoly, as_scalar
from .linalg import ONE, Matrix, flip_conjugate
from .sl2 import HighestWeight

GENERATORS = ("A", "B", "C", "D")
Pair = Tuple[int, int]

# weight change m -> m + shift on the blocks V_m
BLOCK_SHIFT = {"A": 0, "D": 0, "B": 1, "C": -1}


class EtaMismatchError(ValueError):
    pass


class TruncationError(ValueError):
    """A full-space or out-of-range request on a truncated Verma module."""


@dataclass(frozen=True)
class EvalRep:
    hw: HighestWeight
    delta: Fraction
    eta: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "delta", as_scalar(self.delta))
        object.__setattr__(self, "eta", as_scalar(self.eta))
        if self.eta == 0:
            raise ValueError("eta must be nonzero")

    @classmethod
    def make(cls, lam, delta, eta=1, cutoff: Optional[int] = None) -> "EvalRep":
        return cls(HighestWeight(as_scalar(lam), cutoff), delta, eta)

    @property
    def lam(self) -> Fraction:
        return self.hw.lam

    @property
    def size(self) -> int:
        return self.hw.size

    @property
    def finite(self) -> bool:
        return self.hw.finite

    def e(self, k):
        return self.hw.e(k)

    def f(self, k):
        return self.hw.f(k)

    def a(self, k) -> SpectralPoly:
        """``a_k(u) = u - delta + eta (lam - k)``."""
        return SpectralPoly.linear(-self.delta + self.eta * (self.lam - k))

    def d(self, k) -> SpectralPoly:
        """``d_k(u) = u - delta - eta (lam - k)``."""
        return SpectralPoly.linear(-self.delta - self.eta * (self.lam - k))


# bases -------------------------------------------------------------------


def full_basis(rep1: EvalRep, rep2: EvalRep) -> Tuple[Pair, ...]:
    return tuple((l, k) for l in range(rep1.size) for k in range(rep2.size))


def weight_block(rep1: EvalRep, rep2: EvalRep, m: int) -> Tuple[Pair, ...]:
    """Basis of ``V_m`` (pairs with ``l + k = m``) ordered by increasing ``l``."""
    if m < 0:
        return ()
    return tuple((l, m - l) for l in range(m + 1)
                 if l < rep1.size and m - l < rep2.size)


def require_finite(*reps: EvalRep):
    for r in reps:
        if not r.finite:
            raise TruncationError(
                "full-space operators need finite-dimensional factors; "
                "use the block-wise API for truncated Verma modules")


def require_block(rep1: EvalRep, rep2: EvalRep, m: int):
    """Block ``V_m`` is exact only when no truncated factor is cut below ``m``."""
    for r in (rep1, rep2):
        if not r.finite and m > r.hw.cutoff:
            raise TruncationError(f"block m={m} exceeds cutoff {r.hw.cutoff}")


def _check_eta(rep1: EvalRep, rep2: EvalRep):
    if rep1.eta != rep2.eta:
        raise EtaMismatchError(f"representations use different eta: "
                               f"{rep1.eta} and {rep2.eta}")


# single factor -------------------------------------------------------------


def eval_op(x: str, rep: EvalRep) -> Matrix:
    """Matrix of ``X(u)`` on one evaluation module (entries of degree <= 1)."""
    n = rep.size
    basis = range(n)
    eta = rep.eta
    if x == "A":
        return Matrix.diagonal(basis, [rep.a(k) for k in basis])
    if x == "D":
        return Matrix.diagonal(basis, [rep.d(k) for k in basis])
    if x == "B":
        return Matrix.from_action(
            basis, basis, lambda k: {k + 1: eta * rep.f(k)} if k + 1 < n else {})
    if x == "C":
        return Matrix.from_action(
            basis, basis, lambda k: {k - 1: eta * rep.e(k)} if k > 0 else {})
    raise ValueError(f"unknown generator {x!r}")


def qdet_matrix(rep: EvalRep) -> Matrix:
    """``A(u + eta/2) D(u - eta/2) - B(u + eta/2) C(u - eta/2)`` on one factor."""
    h = rep.eta / 2
    up = lambda m: m.map(lambda p: p.shift(h) if isinstance(p, SpectralPoly) else p)
    down = lambda m: m.map(lambda p: p.shift(-h) if isinstance(p, SpectralPoly) else p)
    return (up(eval_op("A", rep)) @ down(eval_op("D", rep))
            - up(eval_op("B", rep)) @ down(eval_op("C", rep)))


def qdet_scalar(rep: EvalRep) -> SpectralPoly:
    """``(w + eta/2)(w - eta/2) - eta^2 lam (lam + 1)`` with ``w = u - delta``."""
    w = SpectralPoly.linear(-rep.delta)
    h = rep.eta / 2
    return (w + h) * (w - h) - rep.eta ** 2 * rep.lam * (rep.lam + 1)


# two-fold coproduct ---------------------------------------------------------


def coproduct_action(x: str, rep1: EvalRep, rep2: EvalRep):
    """``|l,k> -> {target: coeff}`` for ``Delta X(u)``; targets off the basis are dropped."""
    eta = rep1.eta
    n1, n2 = rep1.size, rep2.size

    def keep(terms: Dict[Pair, SpectralPoly]):
        return {(l, k): c for (l, k), c in terms.items()
                if 0 <= l < n1 and 0 <= k < n2 and c}

    if x == "A":
        def act(v):
            l, k = v
            return keep({(l, k): rep1.a(l) * rep2.a(k),
                         (l - 1, k + 1): eta * eta * rep1.e(l) * rep2.f(k)})
    elif x == "B":
        def act(v):
            l, k = v
            return keep({(l + 1, k): eta * rep1.f(l) * rep2.a(k),
                         (l, k + 1): eta * rep2.f(k) * rep1.d(l)})
    elif x == "C":
        def act(v):
            l, k = v
            return keep({(l, k - 1): eta * rep2.e(k) * rep1.a(l),
                         (l - 1, k): eta * rep1.e(l) * rep2.d(k)})
    elif x == "D":
        def act(v):
            l, k = v
            return keep({(l + 1, k - 1): eta * eta * rep1.f(l) * rep2.e(k),
                         (l, k): rep1.d(l) * rep2.d(k)})
    else:
        raise ValueError(f"unknown generator {x!r}")
    return act


def coproduct_op(x: str, rep1: EvalRep, rep2: EvalRep) -> Matrix:
    """Dense matrix of ``Delta X(u)`` on ``V1 (x) V2`` (finite-dimensional factors)."""
    _check_eta(rep1, rep2)
    require_finite(rep1, rep2)
    basis = full_basis(rep1, rep2)
    return Matrix.from_action(basis, basis, coproduct_action(x, rep1, rep2))


def coproduct_block(x: str, rep1: EvalRep, rep2: EvalRep, m: int) -> Matrix:
    """``Delta X(u)`` restricted to ``V_m``, mapping into ``V_{m + shift}``."""
    _check_eta(rep1, rep2)
    target = m + BLOCK_SHIFT[x]
    require_block(rep1, rep2, max(m, target))
    return Matrix.from_action(weight_block(rep1, rep2, m),
                              weight_block(rep1, rep2, target),
                              coproduct_action(x, rep1, rep2))


def opposite_coproduct_op(x: str, rep1: EvalRep, rep2: EvalRep) -> Matrix:
    """``Delta^op X(u)`` on ``V1 (x) V2``: flip-conjugate of ``Delta X`` on ``V2 (x) V1``."""
    swapped = coproduct_op(x, rep2, rep1)
    basis = full_basis(rep1, rep2)
    return flip_conjugate(swapped, basis, basis)


def opposite_coproduct_block(x: str, rep1: EvalRep, rep2: EvalRep, m: int) -> Matrix:
    swapped = coproduct_block(x, rep2, rep1, m)
    return flip_conjugate(swapped, weight_block(rep1, rep2, m + BLOCK_SHIFT[x]),
                          weight_block(rep1, rep2, m))


def total_weight_op(rep1: EvalRep, rep2: EvalRep) -> Matrix:
    """``H (x) 1 + 1 (x) H`` on the full space."""
    basis = full_basis(rep1, rep2)
    return Matrix.diagonal(basis, [rep1.hw.h(l) + rep2.hw.h(k) for l, k in basis])


def identity_op(rep1: EvalRep, rep2: EvalRep) -> Matrix:
    return Matrix.identity(full_basis(rep1, rep2))
