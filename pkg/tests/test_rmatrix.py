from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from conftest import generic_params, half_params, shifts, etas
from yangtwist.evaluation import EvalRep, full_basis
from yangtwist.exact import PoleError
from yangtwist.linalg import Matrix
from yangtwist.rmatrix import (METHODS, check_intertwiner, check_unitarity, check_ybe,
                               flip_operator, fundamental_closed_form, r0_over_chi, r_matrix,
                               triangular_r_factor)
from yangtwist.twist import TwistParams

HALF = Q(1, 2)


def test_triangular_factor_examples():
    p = half_params()
    assert triangular_r_factor(p, "minus").column((0, 1)) == {(0, 1): 1, (1, 0): HALF}
    assert triangular_r_factor(p, "plus").column((1, 0)) == {(1, 0): 1, (0, 1): HALF}
    assert triangular_r_factor(p, "plus").column((0, 0)) == {(0, 0): 1}


@given(generic_params())
def test_triangular_shape(p):
    """R+ only raises the left weight index, R- only lowers it; both unipotent."""
    for side, sign in (("plus", -1), ("minus", 1)):
        m = triangular_r_factor(p, side)
        for col in m.cols:
            for row in m.column(col):
                assert row == col or (row[0] - col[0]) * sign > 0
            assert m.at(col, col) == 1


def test_r0_examples():
    r0 = r0_over_chi(half_params())
    assert r0.is_diagonal()
    assert r0.at((0, 0), (0, 0)) == 1
    assert r0.at((0, 1), (0, 1)) == HALF
    assert r0.at((1, 0), (1, 0)) == Q(2, 3)


def test_r_matrix_examples():
    p = half_params()
    for method in METHODS:
        r = r_matrix(p, method)
        assert r.column((0, 1)) == {(0, 1): Q(2, 3), (1, 0): Q(1, 3)}
        assert r.column((1, 0)) == {(0, 1): Q(1, 3), (1, 0): Q(2, 3)}
        assert r.column((0, 0)) == {(0, 0): 1}


def test_fundamental_closed_form_examples():
    m = fundamental_closed_form(2, 0, 1)
    assert m.column((0, 1)) == {(0, 1): Q(2, 3), (1, 0): Q(1, 3)}
    rep = EvalRep.make(HALF, 0)
    flip = flip_operator(rep, rep)
    assert fundamental_closed_form(Q(3, 2), Q(3, 2), 1) == flip
    assert fundamental_closed_form(0, 0, Q(-7, 3)) == flip
    with pytest.raises(PoleError):
        fundamental_closed_form(-1, 0, 1)


@given(shifts, shifts, etas)
def test_fundamental_matches_all_methods(d1, d2, eta):
    z = (d1 - d2) / eta
    if z in (-1, 0, 1):  # pole of R, twist pole, reducible point
        return
    p = TwistParams.make(HALF, HALF, d1, d2, eta)
    ref = fundamental_closed_form(d1, d2, eta)
    for method in METHODS:
        assert r_matrix(p, method) == ref


def test_intertwiner_examples():
    assert check_intertwiner(half_params()).passed
    assert check_intertwiner(TwistParams.make(1, HALF, 5, 0)).passed


def test_intertwiner_pole_and_singular_point():
    # d = -eta: the fundamental R-matrix has its pole
    with pytest.raises(PoleError) as info:
        r_matrix(half_params(delta1=-1))
    assert info.value.factor == "R0/chi"
    # d = +eta: R exists but is the singular projector (1 + P)/2
    r = r_matrix(half_params(delta1=1))
    with pytest.raises(PoleError):
        r.inverse()
    assert check_intertwiner(half_params(delta1=1)).passed


@given(generic_params())
def test_methods_agree_and_intertwine(p):
    gauss = r_matrix(p, "gauss")
    assert r_matrix(p, "twist") == gauss
    assert r_matrix(p, "twist_hat") == gauss
    assert check_intertwiner(p).passed


@given(generic_params())
def test_unitarity(p):
    assert check_unitarity(p).passed


def _rep(lam, delta):
    return EvalRep.make(lam, delta, 1)


def test_ybe_examples():
    assert check_ybe(_rep(HALF, 3), _rep(HALF, 1), _rep(HALF, 0)).passed
    assert check_ybe(_rep(HALF, 4), _rep(HALF, 2), _rep(1, 0)).passed
    same = _rep(HALF, Q(1, 3))
    assert check_ybe(_rep(HALF, Q(5, 3)), same, same).passed


def test_ybe_params_echo():
    rep = check_ybe(_rep(HALF, 3), _rep(HALF, 1), _rep(1, 0)).to_json()
    assert rep["params"]["rep3"] == {"lambda": "1", "delta": "0", "eta": "1"}
    assert "witness" not in rep


def test_ybe_detects_a_wrong_r_matrix(monkeypatch):
    """Feeding a non-solution (all R_ij equal to the identity plus a twist) must fail."""
    import yangtwist.rmatrix as rm
    real = rm.pair_r_matrix

    def broken(a, b, method="gauss"):
        r = real(a, b, method)
        return r @ r
    monkeypatch.setattr(rm, "pair_r_matrix", broken)
    rep = rm.check_ybe(_rep(HALF, 3), _rep(HALF, 1), _rep(HALF, 0))
    assert not rep.passed and rep.witness is not None


def test_ybe_pole_names_pair():
    with pytest.raises(PoleError) as info:
        check_ybe(_rep(HALF, 0), _rep(HALF, 1), _rep(HALF, 5))
    assert info.value.factor == "R_12"
