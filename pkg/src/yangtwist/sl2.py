"""Highest-weight sl2 modules in the Cartan-Weyl basis.

Conventions: ``[H, E] = E``, ``[H, F] = -F``, ``[E, F] = 2H`` and on the weight
basis ``|0>, |1>, ...``::

    H|k> = (lam - k)|k>,   E|k> = k|k-1>,   F|k> = (2 lam - k)|k+1>

Generic weights are modelled as Verma modules truncated at ``|N>`` with
``F|N> := 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import as_scalar, format_rational
from .linalg import Matrix


class InvalidWeightError(ValueError):
    pass


@dataclass(frozen=True)
class HighestWeight:
    lam: Fraction
    cutoff: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "lam", as_scalar(self.lam))
        two = 2 * self.lam
        if self.cutoff is not None and self.cutoff < 0:
            raise InvalidWeightError("cutoff must be nonnegative")
        if two.denominator == 1 and two >= 0:
            if self.cutoff is not None and self.cutoff < two:
                raise InvalidWeightError(
                    f"cutoff {self.cutoff} is below 2*lambda = {two}")
        elif self.cutoff is None:
            raise InvalidWeightError(
                f"lambda = {format_rational(self.lam)} needs a cutoff "
                "(infinite-dimensional module)")

    @property
    def finite(self) -> bool:
        two = 2 * self.lam
        return two.denominator == 1 and two >= 0

    @property
    def size(self) -> int:
        return basis_size(self)

    def e(self, k: int) -> Fraction:
        return Fraction(k)

    def f(self, k: int) -> Fraction:
        return 2 * self.lam - k

    def h(self, k: int) -> Fraction:
        return self.lam - k


def basis_size(hw: HighestWeight) -> int:
    """``2 lam + 1`` for finite-dimensional modules, ``N + 1`` when truncated."""
    if hw.finite:
        return int(2 * hw.lam) + 1
    return hw.cutoff + 1


def act_generator(gen: str, hw: HighestWeight) -> Matrix:
    """Matrix of ``E``, ``F`` or ``H`` in the ordered basis ``|0>, |1>, ...``."""
    n = basis_size(hw)
    basis = range(n)
    if gen == "H":
        return Matrix.diagonal(basis, [hw.h(k) for k in basis])
    if gen == "E":
        return Matrix.from_action(basis, basis,
                                  lambda k: {k - 1: hw.e(k)} if k > 0 else {})
    if gen == "F":
        # top vector: f_{2 lam} = 0 for finite modules, truncation otherwise
        return Matrix.from_action(basis, basis,
                                  lambda k: {k + 1: hw.f(k)} if k + 1 < n else {})
    raise ValueError(f"unknown sl2 generator {gen!r}")


def casimir_matrix(hw: HighestWeight) -> Matrix:
    """``H^2 + (EF + FE)/2``; equals ``lam(lam+1)`` away from the truncation row."""
    e, f, h = (act_generator(g, hw) for g in "EFH")
    return h @ h + (e @ f + f @ e).scale(Fraction(1, 2))
