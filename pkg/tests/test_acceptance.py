"""Acceptance suite: twelve exact criteria, tolerance zero.

Run with pytest (a PASS/FAIL line per criterion appears in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""
from fractions import Fraction as Q
from itertools import product

import pytest

from yangtwist.evaluation import EvalRep, eval_op, full_basis
from yangtwist.exact import PoleError
from yangtwist.linalg import Matrix, kron
from yangtwist.rmatrix import (METHODS, check_intertwiner, check_ybe, flip_operator,
                               fundamental_closed_form, r_matrix)
from yangtwist.sampling import SampleConfig, delta_pairs, delta_triples, scaled_samples
from yangtwist.spectra import scan_poles
from yangtwist.suites import (closed_suite, cocomm_suite, factor_suite, intertwine_suite,
                              sanity_suite)
from yangtwist.twist import (TwistParams, TwistVariant, build_twist_block,
                             check_cocommutativity_block, gamma_form_q, m_coeff, q_diag,
                             twisted_coproduct, twisted_coproduct_block)

WEIGHTS = [Q(1, 2), Q(1), Q(3, 2), Q(2)]
GRID = [TwistParams.make(l1, l2, d1, d2, 1)
        for l1, l2 in product(WEIGHTS, WEIGHTS)
        for d1, d2 in delta_pairs(SampleConfig(seed=7 + int(4 * l1 + l2)))]

RESULTS = {}


def record(number, title, ok, note=""):
    RESULTS[number] = (title, ok, note)
    return ok


def _first_failure(reports):
    bad = next((r for r in reports if not r.passed), None)
    return "" if bad is None else f"{bad.name} at {bad.params}: {bad.witness}"


def _suite_over_grid(suite):
    reports = [r for p in GRID for r in suite(p)]
    return all(reports), _first_failure(reports), len(reports)


# 1 -------------------------------------------------------------------------


def criterion_diagonalization():
    for p in GRID:
        for fam, x in (("F", "D"), ("Ftilde", "A")):
            got = twisted_coproduct(p, fam, x)
            want = kron(eval_op(x, p.rep1), eval_op(x, p.rep2))
            if not (got.is_diagonal() and got == want):
                return False, f"{fam}/{x} at {p.echo()}"
    return True, f"{len(GRID)} points"


def criterion_closed_forms():
    ok, note, n = _suite_over_grid(closed_suite)
    return ok, note or f"{n} reports"


def criterion_cocommutativity():
    ok, note, n = _suite_over_grid(cocomm_suite)
    return ok, note or f"{n} reports"


def criterion_factorization():
    ok, note, n = _suite_over_grid(factor_suite)
    return ok, note or f"{n} reports"


def criterion_intertwiner():
    ok, note, n = _suite_over_grid(intertwine_suite)
    return ok, note or f"{n} reports"


def criterion_ybe():
    count = 0
    for lams in product([Q(1, 2), Q(1)], repeat=3):
        for seed, deltas in enumerate(delta_triples(SampleConfig(seed=31))):
            reps = [EvalRep.make(lam, d, 1) for lam, d in zip(lams, deltas)]
            rep = check_ybe(*reps)
            count += 1
            if not rep.passed:
                return False, f"{rep.params}: {rep.witness}"
    return True, f"{count} triples"


def criterion_fundamental():
    half = Q(1, 2)
    for d1, d2, eta in scaled_samples(SampleConfig(seed=5, count=20)):
        ref = fundamental_closed_form(d1, d2, eta)
        p = TwistParams.make(half, half, d1, d2, eta)
        for method in METHODS:
            if r_matrix(p, method) != ref:
                return False, f"{method} at {p.echo()}"
    rep = EvalRep.make(half, 0)
    flip = flip_operator(rep, rep)
    for d, eta in ((Q(0), Q(1)), (Q(5, 3), Q(-2)), (Q(-7), Q(1, 4))):
        if fundamental_closed_form(d, d, eta) != flip:
            return False, f"flip limit at delta={d}, eta={eta}"
    return True, "20 samples + flip limit"


def criterion_recursions():
    for p in GRID:
        g, gt = p.g, p.gtilde
        n1, n2 = int(2 * p.lam1), int(2 * p.lam2)
        q = lambda l, k, f: q_diag(p, l, k, f)
        for l, k in full_basis(p.rep1, p.rep2):
            checks = []
            if l >= 1:
                checks.append(q(l, k, "q") * g(k - l) == g(-l) * q(l - 1, k, "q"))
            if k < n2:
                checks.append(q(l, k + 1, "q") * g(k - 2 * p.lam1) == g(k - l) * q(l, k, "q"))
            if l < n1:
                checks.append(q(l + 1, k, "qtilde") * gt(2 * p.lam2 - l)
                              == gt(k - l) * q(l, k, "qtilde"))
                checks.append(q(l + 1, k, "qhat") * g(k - l)
                              == g(2 * p.lam2 - l) * q(l, k, "qhat"))
            if k >= 1:
                checks.append(q(l, k, "qtilde") * gt(k - l) == gt(k) * q(l, k - 1, "qtilde"))
                checks.append(q(l, k, "qhat") * g(k) == g(k - l) * q(l, k - 1, "qhat"))
            for fam in ("q", "qtilde", "qhat"):
                checks.append(gamma_form_q(p, l, k, fam) == q(l, k, fam))
            checks.append(q(l, k, "qhat") * q_diag(p.swapped(), k, l, "q") == 1)
            if not all(checks):
                return False, f"({l},{k}) at {p.echo()}"
    return True, f"{len(GRID)} points"


def criterion_m_ratios():
    count = 0
    for p in GRID:
        eta, g, gt = p.eta, p.g, p.gtilde
        f1, e1, f2, e2 = p.rep1.f, p.rep1.e, p.rep2.f, p.rep2.e
        for l, k in full_basis(p.rep1, p.rep2):
            for n in range(k + 1):
                m = m_coeff(p, k, l, n)
                eqs = [m_coeff(p, k, l, 0) == 1]
                if n < k:
                    eqs.append(m_coeff(p, k, l, n + 1) * (n + 1) * g(k - l - n - 1)
                               == -eta * f1(l + n) * e2(k - n) * m)
                    eqs.append(m_coeff(p, k - 1, l, n) * e2(k) * g(k - l - n - 1)
                               == e2(k - n) * g(k - l - 1) * m)
                if l >= 1:
                    eqs.append(m_coeff(p, k, l - 1, n) * f1(l + n - 1) * g(k - l)
                               == f1(l - 1) * g(k - l - n) * m)
                count += len(eqs)
                if not all(eqs):
                    return False, f"M^({k},{l})_{n} at {p.echo()}"
            for n in range(l + 1):
                mt = m_coeff(p, k, l, n, tilde=True)
                eqs = [m_coeff(p, k, l, 0, tilde=True) == 1]
                if n < l:
                    eqs.append(m_coeff(p, k, l, n + 1, tilde=True) * (n + 1) * gt(k - l + n + 1)
                               == eta * e1(l - n) * f2(k + n) * mt)
                    eqs.append(m_coeff(p, k, l - 1, n, tilde=True) * e1(l) * gt(k - l + n + 1)
                               == e1(l - n) * gt(k - l + 1) * mt)
                if k >= 1:
                    eqs.append(m_coeff(p, k - 1, l, n, tilde=True) * f2(k + n - 1) * gt(k - l)
                               == f2(k - 1) * gt(k - l + n) * mt)
                count += len(eqs)
                if not all(eqs):
                    return False, f"Mtilde^({k},{l})_{n} at {p.echo()}"
    return True, f"{count} identities"


def criterion_pole_prediction():
    weights = [Q(1, 2), Q(1), Q(3, 2)]
    for l1, l2 in product(weights, weights):
        top = l1 + l2 + 1
        cands = [-top + Q(i, 2) for i in range(int(4 * top) + 1)]
        rep = scan_poles(l1, l2, 1, cands)
        if not rep.passed:
            return False, f"({l1},{l2}): {rep.witness}"
    return True, "9 weight pairs"


def criterion_verma_blocks():
    third = Q(1, 3)
    p = TwistParams.make(third, third, Q(1, 2), 0, 1, 6, 6)
    for m in range(6):
        blk = twisted_coproduct_block(p, "F", "D", m)
        want = Matrix.diagonal(blk.cols, [p.rep1.d(l) * p.rep2.d(k) for l, k in blk.cols])
        if blk != want:
            return False, f"Delta D block m={m} not diagonal"
        inv = build_twist_block(p, TwistVariant("F", "inverse"), m)
        fwd = build_twist_block(p, TwistVariant("F", "forward"), m)
        if fwd @ inv != Matrix.identity(inv.rows):
            return False, f"block inverse m={m}"
        rep = check_cocommutativity_block(p, "F", m)
        if not rep.passed:
            return False, f"cocommutativity m={m}: {rep.witness}"
    return True, "m = 0..5"


def criterion_sanity():
    ok, note, n = _suite_over_grid(sanity_suite)
    return ok, note or f"{n} reports"


CRITERIA = [
    (1, "diagonalization of Delta D and Delta A", criterion_diagonalization),
    (2, "closed-form twisted coproducts", criterion_closed_forms),
    (3, "cocommutativity of the twisted coproducts", criterion_cocommutativity),
    (4, "factorization R = F21^-1 F12 = R+ R0/chi R- = Fhat21^-1 Fhat12", criterion_factorization),
    (5, "intertwiner identity", criterion_intertwiner),
    (6, "Yang-Baxter equation", criterion_ybe),
    (7, "fundamental closed form", criterion_fundamental),
    (8, "recursion, Gamma form and hat-swap identities", criterion_recursions),
    (9, "M-coefficient ratio identities", criterion_m_ratios),
    (10, "pole prediction scans", criterion_pole_prediction),
    (11, "truncated Verma blocks", criterion_verma_blocks),
    (12, "algebraic sanity", criterion_sanity),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    try:
        ok, note = fn()
    except PoleError as exc:
        ok, note = False, f"unexpected pole: {exc}"
    record(number, title, ok, note)
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({note})")
    assert ok, note


if __name__ == "__main__":
    failed = 0
    for number, title, fn in CRITERIA:
        ok, note = fn()
        failed += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({note})")
    raise SystemExit(1 if failed else 0)
