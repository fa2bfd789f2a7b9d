"""Factorizing twists on two-fold tensor products of evaluation modules.

Three families share the same machinery:

* ``F``      diagonalizes ``Delta D(u)``; diagonal part from the ``q`` coefficients
* ``Ftilde`` diagonalizes ``Delta A(u)``; diagonal part from ``qtilde``
* ``Fhat``   triangular part of ``F`` with the alternative ``qhat`` diagonal part

Entries are built as a rational constant times a product of powers of the
linear factors ``g(x) = d + eta (lam1 - lam2 + x)`` (or
``gtilde(x) = -d + eta (lam1 - lam2 + x)``), ``d = delta1 - delta2``.  Equal
factors cancel before evaluation, so a pole is reported only when it survives
in the reduced rational function of ``d``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Optional

from .evaluation import (BLOCK_SHIFT, GENERATORS, EvalRep, Pair, _check_eta,
                         coproduct_block, coproduct_op, eval_op, full_basis,
                         require_block, require_finite, weight_block)
from .exact import PoleError, format_rational, gamma_product
from .linalg import ONE, ZERO, Matrix, flip_conjugate, kron
from .report import CheckReport

FAMILIES = ("F", "Ftilde", "Fhat")
Q_FAMILIES = ("q", "qtilde", "qhat")


@dataclass(frozen=True)
class TwistParams:
    rep1: EvalRep
    rep2: EvalRep

    def __post_init__(self):
        _check_eta(self.rep1, self.rep2)

    @classmethod
    def make(cls, lam1, lam2, delta1, delta2, eta=1, cutoff1=None, cutoff2=None):
        return cls(EvalRep.make(lam1, delta1, eta, cutoff1),
                   EvalRep.make(lam2, delta2, eta, cutoff2))

    @property
    def eta(self) -> Fraction:
        return self.rep1.eta

    @property
    def lam1(self) -> Fraction:
        return self.rep1.lam

    @property
    def lam2(self) -> Fraction:
        return self.rep2.lam

    @property
    def d(self) -> Fraction:
        return self.rep1.delta - self.rep2.delta

    def g(self, x) -> Fraction:
        return self.d + self.eta * (self.lam1 - self.lam2 + x)

    def gtilde(self, x) -> Fraction:
        return -self.d + self.eta * (self.lam1 - self.lam2 + x)

    def swapped(self) -> "TwistParams":
        return TwistParams(self.rep2, self.rep1)

    def echo(self) -> dict:
        out = {"lambda1": format_rational(self.lam1), "lambda2": format_rational(self.lam2),
               "delta1": format_rational(self.rep1.delta),
               "delta2": format_rational(self.rep2.delta),
               "eta": format_rational(self.eta)}
        for i, r in ((1, self.rep1), (2, self.rep2)):
            if r.hw.cutoff is not None:
                out[f"cutoff{i}"] = r.hw.cutoff
        return out


@dataclass(frozen=True)
class TwistVariant:
    family: str = "F"
    direction: str = "forward"
    swapped: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown twist family {self.family!r}")
        if self.direction not in ("forward", "inverse"):
            raise ValueError(f"unknown direction {self.direction!r}")


# factored rational functions of d ------------------------------------------


class Factored:
    """``const * prod_x factor(x) ** power[x]`` for one factor family."""

    __slots__ = ("const", "powers")

    def __init__(self, const=ONE, powers=None):
        self.const = Fraction(const)
        self.powers = Counter() if powers is None else powers

    def times(self, x, power=1):
        self.powers[Fraction(x)] += power
        return self

    def evaluate(self, factor: Callable, family: str, where=None) -> Fraction:
        if not self.const:
            return ZERO
        num = self.const
        den = ONE
        for x, p in self.powers.items():
            if p == 0:
                continue
            v = factor(x)
            if v == 0:
                if p < 0:
                    raise PoleError(f"{family}({format_rational(x)}) = 0 in the "
                                    f"entry at {where}", argument=x, family=family,
                                    where=where)
                return ZERO
            if p > 0:
                num *= v ** p
            else:
                den *= v ** (-p)
        return num / den


def _weight_const(coeffs):
    out = ONE
    for c in coeffs:
        out *= c
    return out


# M coefficients and diagonal parts -------------------------------------------


def m_coeff(p: TwistParams, k: int, l: int, n: int, tilde: bool = False) -> Fraction:
    """Coefficients ``M^{k,l}_n`` (or their tilde companions) of the eigenvectors.

    A vanishing weight product gives 0 without evaluating the denominators.
    """
    r1, r2, eta = p.rep1, p.rep2, p.eta
    if tilde:
        num = _weight_const(r1.e(l - j + 1) * r2.f(k + j - 1) for j in range(1, n + 1))
        out = Factored(eta ** n / factorial(n) * num)
        for j in range(1, n + 1):
            out.times(k - l + j, -1)
        return out.evaluate(p.gtilde, "gtilde", where=(k, l, n))
    num = _weight_const(r1.f(l + j - 1) * r2.e(k - j + 1) for j in range(1, n + 1))
    out = Factored((-eta) ** n / factorial(n) * num)
    for j in range(1, n + 1):
        out.times(k - l - j, -1)
    return out.evaluate(p.g, "g", where=(k, l, n))


def _q_factors(p: TwistParams, l: int, k: int, family: str) -> Factored:
    """Diagonal coefficient of ``Q^{-1}`` on ``|l,k>`` as factors of g / gtilde."""
    out = Factored()
    if family == "q":
        for j in range(k):
            out.times(j - l, 1).times(j - 2 * p.lam1, -1)
    elif family == "qtilde":
        for j in range(1, l + 1):
            out.times(k - l + j, 1).times(2 * p.lam2 - l + j, -1)
    elif family == "qhat":
        for j in range(l):
            out.times(2 * p.lam2 - l + 1 + j, 1).times(k - l + 1 + j, -1)
    else:
        raise ValueError(f"unknown q family {family!r}")
    return out


def _q_factor_fn(p: TwistParams, family: str):
    return (p.gtilde, "gtilde") if family == "qtilde" else (p.g, "g")


def q_diag(p: TwistParams, l: int, k: int, family: str = "q") -> Fraction:
    """Closed-form diagonal coefficients ``q``, ``qtilde`` or ``qhat`` as finite products.

    Factors are multiplied out one index at a time without cancellation; a
    vanishing denominator raises :class:`PoleError` with the product index.
    """
    fn, name = _q_factor_fn(p, family)
    out = ONE
    if family == "q":
        terms = [(j, j - l, j - 2 * p.lam1) for j in range(k)]
    elif family == "qtilde":
        terms = [(j, k - l + j, 2 * p.lam2 - l + j) for j in range(1, l + 1)]
    elif family == "qhat":
        terms = [(j, 2 * p.lam2 - l + 1 + j, k - l + 1 + j) for j in range(l)]
    else:
        raise ValueError(f"unknown q family {family!r}")
    for j, xn, xd in terms:
        den = fn(xd)
        if den == 0:
            raise PoleError(f"{family}_{l}{k}: denominator factor j={j} vanishes",
                            argument=xd, family=name, where=j)
        out *= fn(xn) / den
    return out


def gamma_form_q(p: TwistParams, l: int, k: int, family: str = "q") -> Fraction:
    """Diagonal coefficient on ``|l,k>`` from the Gamma-quotient operator form."""
    eta = p.eta
    lam1, lam2 = p.lam1, p.lam2
    h1, h2 = lam1 - l, lam2 - k  # eigenvalues of H(x)1 and 1(x)H
    if family == "q":
        z = p.d / eta
        return gamma_product([(z + h1 - h2, z + h1 - lam2), (z - lam1 - lam2, z - lam1 - h2)])
    if family == "qtilde":
        z = -p.d / eta
        return gamma_product([(z + lam1 - h2 + 1, z + h1 - h2 + 1),
                              (z + h1 + lam2 + 1, z + lam1 + lam2 + 1)])
    if family == "qhat":
        # qhat is the inverse of the swapped Q_21^{-1} coefficient
        z = p.d / eta
        return gamma_product([(z + h1 - h2 + 1, z + lam1 - h2 + 1),
                              (z + lam1 + lam2 + 1, z + h1 + lam2 + 1)])
    raise ValueError(f"unknown q family {family!r}")


def diagonal_part(p: TwistParams, family: str = "q", inverse: bool = True,
                  basis=None) -> Matrix:
    """``Q^{-1}`` (``inverse=True``) or ``Q`` for the given q family, as a diagonal matrix."""
    if basis is None:
        require_finite(p.rep1, p.rep2)
        basis = full_basis(p.rep1, p.rep2)
    fn, name = _q_factor_fn(p, family)
    vals = []
    for l, k in basis:
        fac = _q_factors(p, l, k, family)
        if not inverse:
            fac = Factored(ONE, Counter({x: -e for x, e in fac.powers.items()}))
        vals.append(fac.evaluate(fn, name, where=(l, k)))
    return Matrix.diagonal(basis, vals)


def swapped_diagonal_part(p: TwistParams, inverse: bool = True, basis=None) -> Matrix:
    """``Q_21^{-1}`` (or ``Q_21``) on ``V1 (x) V2``: coefficient ``q^swap_{k l}`` on ``|l,k>``."""
    if basis is None:
        basis = full_basis(p.rep1, p.rep2)
    sw = p.swapped()
    flipped = diagonal_part(sw, "q", inverse, basis=[(k, l) for l, k in basis])
    return Matrix.diagonal(basis, flipped.diagonal_entries())


# twist entries ---------------------------------------------------------------


def _twist_column(p: TwistParams, family: str, direction: str, v: Pair,
                  sizes) -> Dict[Pair, Factored]:
    """Image of ``|l,k>`` under the twist, entries still in factored form."""
    l, k = v
    r1, r2, eta = p.rep1, p.rep2, p.eta
    n1, n2 = sizes
    out: Dict[Pair, Factored] = {}
    if family in ("F", "Fhat"):
        qfam = "q" if family == "F" else "qhat"
        for n in range(k + 1):
            L, K = l + n, k - n
            if L >= n1:
                break
            w = _weight_const(r1.f(l + j - 1) * r2.e(k - j + 1) for j in range(1, n + 1))
            if not w:
                continue
            if direction == "inverse":
                fac = _q_factors(p, l, k, qfam)
                fac.const = (-eta) ** n / factorial(n) * w
                for j in range(1, n + 1):
                    fac.times(k - l - j, -1)
            else:
                q = _q_factors(p, L, K, qfam)
                fac = Factored((eta ** n) / factorial(n) * w,
                               Counter({x: -e for x, e in q.powers.items()}))
                for j in range(1, n + 1):
                    fac.times(k - l - 2 * n + j, -1)
            out[(L, K)] = fac
    else:  # Ftilde
        for n in range(l + 1):
            L, K = l - n, k + n
            if K >= n2:
                break
            w = _weight_const(r1.e(l - j + 1) * r2.f(k + j - 1) for j in range(1, n + 1))
            if not w:
                continue
            if direction == "inverse":
                fac = _q_factors(p, l, k, "qtilde")
                fac.const = eta ** n / factorial(n) * w
                for j in range(1, n + 1):
                    fac.times(k - l + j, -1)
            else:
                q = _q_factors(p, L, K, "qtilde")
                fac = Factored((-eta) ** n / factorial(n) * w,
                               Counter({x: -e for x, e in q.powers.items()}))
                for j in range(1, n + 1):
                    fac.times(k - l + 2 * n - j, -1)
            out[(L, K)] = fac
    return out


def _assemble(p: TwistParams, family: str, direction: str, basis) -> Matrix:
    fn, name = (p.gtilde, "gtilde") if family == "Ftilde" else (p.g, "g")
    sizes = (p.rep1.size, p.rep2.size)

    def act(v):
        return {t: fac.evaluate(fn, name, where=(v, t))
                for t, fac in _twist_column(p, family, direction, v, sizes).items()}

    return Matrix.from_action(basis, basis, act)


def build_twist(p: TwistParams, v: TwistVariant = TwistVariant()) -> Matrix:
    """Twist matrix on the full space of two finite-dimensional factors.

    The inverse direction sends ``|l,k>`` to the eigenvector ``v_{lk}``; the
    forward direction is built from its own closed form and is the exact
    inverse.  ``swapped`` gives the ``F_21``-type object, built on ``V2 (x) V1``
    with exchanged parameters and conjugated by the flip.
    """
    require_finite(p.rep1, p.rep2)
    basis = full_basis(p.rep1, p.rep2)
    if v.swapped:
        sw = p.swapped()
        inner = _assemble(sw, v.family, v.direction, full_basis(sw.rep1, sw.rep2))
        return flip_conjugate(inner, basis, basis)
    return _assemble(p, v.family, v.direction, basis)


def build_twist_block(p: TwistParams, v: TwistVariant, m: int) -> Matrix:
    """Twist restricted to the weight block ``V_m`` (works for truncated Verma modules)."""
    require_block(p.rep1, p.rep2, m)
    basis = weight_block(p.rep1, p.rep2, m)
    if v.swapped:
        sw = p.swapped()
        inner = _assemble(sw, v.family, v.direction, weight_block(sw.rep1, sw.rep2, m))
        return flip_conjugate(inner, basis, basis)
    return _assemble(p, v.family, v.direction, basis)


# twisted coproducts ----------------------------------------------------------


def twisted_coproduct(p: TwistParams, v_family: Optional[str], x: str) -> Matrix:
    """``F . Delta X(u) . F^{-1}`` by exact matrix sandwich.

    ``v_family=None`` leaves the coproduct untwisted.
    """
    dx = coproduct_op(x, p.rep1, p.rep2)
    if v_family is None:
        return dx
    fwd = build_twist(p, TwistVariant(v_family, "forward"))
    inv = build_twist(p, TwistVariant(v_family, "inverse"))
    return fwd @ dx @ inv


def twisted_coproduct_block(p: TwistParams, v_family: Optional[str], x: str,
                            m: int) -> Matrix:
    """Block ``V_m -> V_{m+shift}`` of the twisted coproduct."""
    dx = coproduct_block(x, p.rep1, p.rep2, m)
    if v_family is None:
        return dx
    target = m + BLOCK_SHIFT[x]
    inv = build_twist_block(p, TwistVariant(v_family, "inverse"), m)
    if target < 0:
        return dx @ inv
    fwd = build_twist_block(p, TwistVariant(v_family, "forward"), target)
    return fwd @ dx @ inv


class NoClosedFormError(LookupError):
    """The requested twisted generator has no closed form (it follows from qdet)."""


def _weights(p: TwistParams, tilde: bool):
    """Diagonal weight operators of the closed forms, keyed by numerator shape."""
    basis = full_basis(p.rep1, p.rep2)
    eta, lam1, lam2 = p.eta, p.lam1, p.lam2
    d = -p.d if tilde else p.d
    out = {"H1+lam2": [], "-lam1-H2": [], "H1-lam2": [], "lam1-H2": []}
    for l, k in basis:
        h1, h2 = lam1 - l, lam2 - k
        den = d + eta * (h1 - h2)
        if den == 0:
            name = "gtilde" if tilde else "g"
            raise PoleError(f"closed-form weight denominator vanishes at {(l, k)}",
                            argument=k - l, family=name, where=(l, k))
        out["H1+lam2"].append((d + eta * (h1 + lam2)) / den)
        out["-lam1-H2"].append((d + eta * (-lam1 - h2)) / den)
        out["H1-lam2"].append((d + eta * (h1 - lam2)) / den)
        out["lam1-H2"].append((d + eta * (lam1 - h2)) / den)
    return {key: Matrix.diagonal(basis, vals) for key, vals in out.items()}


def expected_twisted_coproduct(p: TwistParams, v_family: str, x: str) -> Matrix:
    """Closed-form right-hand side of the twisted coproduct.

    Built from single-factor operators and diagonal weight functions; the
    generator that is only fixed through the quantum determinant (``A`` for
    ``F`` and ``Fhat``, ``D`` for ``Ftilde``) raises :class:`NoClosedFormError`.
    """
    require_finite(p.rep1, p.rep2)
    if v_family not in FAMILIES:
        raise ValueError(f"unknown twist family {v_family!r}")
    r1, r2 = p.rep1, p.rep2
    diag_gen = "A" if v_family == "Ftilde" else "D"
    if x == diag_gen:
        return kron(eval_op(x, r1), eval_op(x, r2))
    if x not in ("B", "C"):
        raise NoClosedFormError(f"no closed form for {x} twisted by {v_family}")
    w = _weights(p, tilde=(v_family == "Ftilde"))
    g1, g2 = eval_op(x, r1), eval_op(x, r2)
    o1, o2 = eval_op(diag_gen, r1), eval_op(diag_gen, r2)
    left, right = kron(g1, o2), kron(o1, g2)
    if v_family in ("F", "Ftilde"):
        if x == "B":
            return left @ w["H1+lam2"] + right @ w["-lam1-H2"]
        return left @ w["H1-lam2"] + right @ w["lam1-H2"]
    # Fhat: weights on the left, with the B and C weights exchanged
    if x == "B":
        return w["H1-lam2"] @ left + w["lam1-H2"] @ right
    return w["H1+lam2"] @ left + w["-lam1-H2"] @ right


# cocommutativity ---------------------------------------------------------------


def _witness(diff):
    if diff is None:
        return None
    row, col, mine, theirs = diff
    from .exact import entry_to_json
    label = lambda b: list(b) if isinstance(b, tuple) else b
    return {"row": label(row), "col": label(col),
            "expected": entry_to_json(theirs), "actual": entry_to_json(mine)}


def check_cocommutativity(p: TwistParams, v_family: Optional[str],
                          generators=GENERATORS) -> CheckReport:
    """Twisted coproduct on ``V1 (x) V2`` against the flip of the one on ``V2 (x) V1``."""
    basis = full_basis(p.rep1, p.rep2)
    details = {}
    witness = None
    for x in generators:
        here = twisted_coproduct(p, v_family, x)
        there = flip_conjugate(twisted_coproduct(p.swapped(), v_family, x), basis, basis)
        diff = here.first_difference(there)
        details[x] = diff is None
        if diff is not None and witness is None:
            witness = dict(_witness(diff), generator=x)
    return CheckReport(f"cocommutativity[{v_family or 'untwisted'}]",
                       all(details.values()), witness, p.echo(), details)


def check_cocommutativity_block(p: TwistParams, v_family: Optional[str], m: int,
                                generators=GENERATORS) -> CheckReport:
    """Block-level cocommutativity on ``V_m`` (all generators whose target block fits)."""
    details = {}
    witness = None
    sw = p.swapped()
    for x in generators:
        target = m + BLOCK_SHIFT[x]
        here = twisted_coproduct_block(p, v_family, x, m)
        inner = twisted_coproduct_block(sw, v_family, x, m)
        there = flip_conjugate(inner, weight_block(p.rep1, p.rep2, target),
                               weight_block(p.rep1, p.rep2, m))
        diff = here.first_difference(there)
        details[x] = diff is None
        if diff is not None and witness is None:
            witness = dict(_witness(diff), generator=x)
    return CheckReport(f"cocommutativity_block[{v_family or 'untwisted'},m={m}]",
                       all(details.values()), witness, p.echo(), details)
