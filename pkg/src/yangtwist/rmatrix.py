"""R-matrix on evaluation modules: Gauss factors, twist factorization, checks.

All R-matrices here are normalized to act as the identity on ``|0,0>``
(the universal R-matrix divided by its character).
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .evaluation import (GENERATORS, EvalRep, coproduct_op, full_basis,
                         opposite_coproduct_op, require_finite)
from .exact import PoleError, as_scalar, format_rational, gamma_product
from .linalg import ONE, ZERO, Matrix, flip_conjugate
from .report import CheckReport
from .twist import TwistParams, TwistVariant, _witness, build_twist

METHODS = ("gauss", "twist", "twist_hat")


def _tri_column(p: TwistParams, side: str, v):
    l, k = v
    r1, r2, eta = p.rep1, p.rep2, p.eta
    out = {}
    top = l if side == "plus" else k
    for n in range(top + 1):
        if side == "plus":
            target = (l - n, k + n)
            if target[1] >= r2.size:
                break
            w = ONE
            for j in range(1, n + 1):
                w *= r1.e(l - j + 1) * r2.f(k + j - 1)
            # diagonal product acts on the source vector
            args = [k - l + j for j in range(1, n + 1)]
        else:
            target = (l + n, k - n)
            if target[0] >= r1.size:
                break
            w = ONE
            for j in range(1, n + 1):
                w *= r1.f(l + j - 1) * r2.e(k - j + 1)
            # diagonal product acts on the target vector
            args = [k - l - 2 * n + j for j in range(1, n + 1)]
        if not w:
            continue
        c = eta ** n / factorial(n) * w
        for j, x in enumerate(args, start=1):
            den = p.g(x)
            if den == 0:
                raise PoleError(f"R_{side}: vanishing denominator on {v}, j={j}",
                                argument=x, family="g", where=(v, j))
            c /= den
        out[target] = c
    return out


def triangular_r_factor(p: TwistParams, side: str) -> Matrix:
    """``R_+`` (upper, ``E^n (x) F^n``) or ``R_-`` (lower, ``F^n (x) E^n``) with unit diagonal."""
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', not {side!r}")
    require_finite(p.rep1, p.rep2)
    basis = full_basis(p.rep1, p.rep2)
    return Matrix.from_action(basis, basis, lambda v: _tri_column(p, side, v))


def r0_over_chi(p: TwistParams) -> Matrix:
    """Diagonal Gauss factor divided by the character, as four Gamma quotients.

    Every quotient has arguments differing by an integer (checked); factors
    cancel across the four quotients before evaluation.
    """
    require_finite(p.rep1, p.rep2)
    basis = full_basis(p.rep1, p.rep2)
    z = p.d / p.eta
    lam1, lam2 = p.lam1, p.lam2
    vals = []
    for l, k in basis:
        h1, h2 = lam1 - l, lam2 - k
        try:
            vals.append(gamma_product([(z + lam1 - h2 + 1, z + h1 - h2 + 1),
                                       (z + h1 + lam2 + 1, z + lam1 + lam2 + 1),
                                       (z + h1 - lam2, z + h1 - h2),
                                       (z - lam1 - h2, z - lam1 - lam2)]))
        except PoleError as exc:
            raise PoleError(f"R0/chi has a pole on {(l, k)}", argument=exc.argument,
                            family="gamma", where=(l, k)) from exc
    return Matrix.diagonal(basis, vals)


def _named(factor: str, fn, *args):
    try:
        return fn(*args)
    except PoleError as exc:
        msg = str(exc) if str(exc).startswith(factor) else f"{factor}: {exc}"
        err = PoleError(msg, argument=exc.argument,
                        family=exc.family, where=exc.where)
        err.factor = factor
        raise err from exc


def r_matrix(p: TwistParams, method: str = "gauss") -> Matrix:
    """R-matrix on ``V1 (x) V2`` (up to character).

    ``gauss``: ``R_+ (R0/chi) R_-``; ``twist``: ``F_21^{-1} F_12``;
    ``twist_hat``: the same with the alternative diagonal part.
    """
    if method == "gauss":
        return (_named("R_plus", triangular_r_factor, p, "plus")
                @ _named("R0/chi", r0_over_chi, p)
                @ _named("R_minus", triangular_r_factor, p, "minus"))
    if method in ("twist", "twist_hat"):
        fam = "F" if method == "twist" else "Fhat"
        f21_inv = _named(f"{fam}_21^-1", build_twist, p, TwistVariant(fam, "inverse", True))
        f12 = _named(f"{fam}_12", build_twist, p, TwistVariant(fam, "forward"))
        return f21_inv @ f12
    raise ValueError(f"unknown method {method!r}")


def flip_operator(rep1: EvalRep, rep2: EvalRep) -> Matrix:
    """The flip ``P`` on ``V (x) V`` for two copies of the same module."""
    if rep1.size != rep2.size:
        raise ValueError("the flip is an operator only for equal factors")
    basis = full_basis(rep1, rep2)
    return Matrix.from_action(basis, basis, lambda v: {(v[1], v[0]): ONE})


def fundamental_closed_form(delta1, delta2, eta=1) -> Matrix:
    """``d/(d+eta) 1 + eta/(d+eta) P`` on ``V_1/2 (x) V_1/2``, ``d = delta1 - delta2``."""
    d = as_scalar(delta1) - as_scalar(delta2)
    eta = as_scalar(eta)
    if d + eta == 0:
        raise PoleError("fundamental R-matrix has a pole at d = -eta",
                        argument=Fraction(-1), family="g")
    rep = EvalRep.make(Fraction(1, 2), 0, eta)
    basis = full_basis(rep, rep)
    ident = Matrix.identity(basis)
    return ident.scale(d / (d + eta)) + flip_operator(rep, rep).scale(eta / (d + eta))


def check_intertwiner(p: TwistParams, method: str = "gauss") -> CheckReport:
    """``Delta^op X(u) R = R Delta X(u)`` for all four generators."""
    r = r_matrix(p, method)
    details = {}
    witness = None
    for x in GENERATORS:
        lhs = opposite_coproduct_op(x, p.rep1, p.rep2) @ r
        rhs = r @ coproduct_op(x, p.rep1, p.rep2)
        diff = rhs.first_difference(lhs)
        details[x] = diff is None
        if diff is not None and witness is None:
            witness = dict(_witness(diff), generator=x)
    return CheckReport(f"intertwiner[{method}]", all(details.values()), witness,
                       p.echo(), details)


def check_unitarity(p: TwistParams, method: str = "gauss") -> CheckReport:
    """``R_21 R_12 = 1`` with ``R_21 = P R(swapped) P``."""
    basis = full_basis(p.rep1, p.rep2)
    r12 = r_matrix(p, method)
    r21 = flip_conjugate(r_matrix(p.swapped(), method), basis, basis)
    diff = (r21 @ r12).first_difference(Matrix.identity(basis))
    return CheckReport(f"unitarity[{method}]", diff is None, _witness(diff), p.echo())


# three factors -----------------------------------------------------------------


def pair_r_matrix(rep_i: EvalRep, rep_j: EvalRep, method: str = "gauss") -> Matrix:
    """R-matrix for an ordered pair; equal modules at equal points give the flip."""
    if rep_i == rep_j:
        return flip_operator(rep_i, rep_j)
    return r_matrix(TwistParams(rep_i, rep_j), method)


def _embed(r: Matrix, slots, basis3) -> Matrix:
    """Place a two-factor operator on tensor slots ``slots`` of a triple product."""
    a, b = slots
    rest = ({0, 1, 2} - {a, b}).pop()

    def act(v):
        out = {}
        for (x, y), c in r.column((v[a], v[b])).items():
            w = [None] * 3
            w[a], w[b], w[rest] = x, y, v[rest]
            out[tuple(w)] = c
        return out

    return Matrix.from_action(basis3, basis3, act)


def check_ybe(rep1: EvalRep, rep2: EvalRep, rep3: EvalRep,
              method: str = "gauss") -> CheckReport:
    """``R12 R13 R23 = R23 R13 R12`` on ``V1 (x) V2 (x) V3``."""
    require_finite(rep1, rep2, rep3)
    reps = (rep1, rep2, rep3)
    basis3 = tuple((a, b, c) for a in range(rep1.size) for b in range(rep2.size)
                   for c in range(rep3.size))
    ops = {}
    for i, j in ((0, 1), (0, 2), (1, 2)):
        r = _named(f"R_{i + 1}{j + 1}", pair_r_matrix, reps[i], reps[j], method)
        ops[(i, j)] = _embed(r, (i, j), basis3)
    lhs = ops[(0, 1)] @ ops[(0, 2)] @ ops[(1, 2)]
    rhs = ops[(1, 2)] @ ops[(0, 2)] @ ops[(0, 1)]
    diff = lhs.first_difference(rhs)
    params = {f"rep{i + 1}": {"lambda": format_rational(r.lam),
                              "delta": format_rational(r.delta),
                              "eta": format_rational(r.eta)}
              for i, r in enumerate(reps)}
    return CheckReport("yang_baxter", diff is None, _witness(diff), params)
