"""Grouped exact checks at one parameter point, shared by the CLI and the scripts."""
from __future__ import annotations

from typing import Callable, Dict, List

from .evaluation import (GENERATORS, eval_op, identity_op, qdet_matrix, qdet_scalar,
                         total_weight_op)
from .linalg import Matrix, kron
from .report import CheckReport
from .rmatrix import (check_intertwiner, check_unitarity, r0_over_chi, r_matrix,
                      triangular_r_factor)
from .sl2 import act_generator, casimir_matrix
from .twist import (FAMILIES, NoClosedFormError, TwistParams, TwistVariant, _witness,
                    build_twist, check_cocommutativity, diagonal_part,
                    expected_twisted_coproduct, swapped_diagonal_part, twisted_coproduct)


def _compare(name: str, p: TwistParams, pairs: Dict[str, tuple]) -> CheckReport:
    details, witness = {}, None
    for key, (mine, ref) in pairs.items():
        diff = mine.first_difference(ref)
        details[key] = diff is None
        if diff is not None and witness is None:
            witness = dict(_witness(diff), item=key)
    return CheckReport(name, all(details.values()), witness, p.echo(), details)


def diag_suite(p: TwistParams) -> List[CheckReport]:
    """``F`` diagonalizes ``Delta D`` and ``Ftilde`` diagonalizes ``Delta A``."""
    out = []
    for fam, x in (("F", "D"), ("Ftilde", "A")):
        got = twisted_coproduct(p, fam, x)
        ref = kron(eval_op(x, p.rep1), eval_op(x, p.rep2))
        out.append(_compare(f"diagonalization[{fam}]", p, {x: (got, ref)}))
    return out


def closed_suite(p: TwistParams) -> List[CheckReport]:
    """Twisted coproducts against their closed forms.

    Generators with no closed form are compared through the quantum
    determinant instead: ``A(u+eta/2) D(u-eta/2) - B(u+eta/2) C(u-eta/2)`` built
    from the twisted generators must equal the product of single-factor qdets.
    """
    out = []
    for fam in FAMILIES:
        pairs = {}
        twisted = {x: twisted_coproduct(p, fam, x) for x in GENERATORS}
        for x in GENERATORS:
            try:
                pairs[x] = (twisted[x], expected_twisted_coproduct(p, fam, x))
            except NoClosedFormError:
                pairs[f"qdet[{x}]"] = (_qdet_of(p, twisted), _qdet_product(p))
        out.append(_compare(f"closed_form[{fam}]", p, pairs))
    return out


def _shifted(m: Matrix, c) -> Matrix:
    return m.map(lambda e: e.shift(c) if hasattr(e, "shift") else e)


def _qdet_of(p: TwistParams, ops: Dict[str, Matrix]) -> Matrix:
    h = p.eta / 2
    return (_shifted(ops["A"], h) @ _shifted(ops["D"], -h)
            - _shifted(ops["B"], h) @ _shifted(ops["C"], -h))


def _qdet_product(p: TwistParams) -> Matrix:
    c = qdet_scalar(p.rep1) * qdet_scalar(p.rep2)
    return identity_op(p.rep1, p.rep2).map(lambda e: e * c if e else e)


def cocomm_suite(p: TwistParams) -> List[CheckReport]:
    return [check_cocommutativity(p, fam) for fam in FAMILIES]


def factor_suite(p: TwistParams) -> List[CheckReport]:
    """Three routes to ``R`` agree, and the Gauss factors match the twist pieces."""
    gauss = r_matrix(p, "gauss")
    q12 = diagonal_part(p, "q", inverse=False)
    q21_inv = swapped_diagonal_part(p, inverse=True)
    f12 = build_twist(p, TwistVariant("F", "forward"))
    f21_inv = build_twist(p, TwistVariant("F", "inverse", swapped=True))
    r_plus, r_minus = triangular_r_factor(p, "plus"), triangular_r_factor(p, "minus")
    pairs = {
        "twist=gauss": (r_matrix(p, "twist"), gauss),
        "twist_hat=gauss": (r_matrix(p, "twist_hat"), gauss),
        "Q21^-1 Q12=R0/chi": (q21_inv @ q12, r0_over_chi(p)),
        "F21^-1=R+ Q21^-1": (f21_inv, r_plus @ q21_inv),
        "F12=Q12 R-": (f12, q12 @ r_minus),
        "Fhat21^-1=R+ Q12": (build_twist(p, TwistVariant("Fhat", "inverse", swapped=True)),
                             r_plus @ q12),
        "Fhat12=Q21^-1 R-": (build_twist(p, TwistVariant("Fhat", "forward")),
                             q21_inv @ r_minus),
    }
    return [_compare("factorization", p, pairs)]


def intertwine_suite(p: TwistParams) -> List[CheckReport]:
    return [check_intertwiner(p, m) for m in ("gauss", "twist", "twist_hat")]


def sanity_suite(p: TwistParams) -> List[CheckReport]:
    out = []
    pairs = {}
    for i, rep in ((1, p.rep1), (2, p.rep2)):
        e, f, h = (act_generator(g, rep.hw) for g in "EFH")
        pairs[f"[H,E]=E ({i})"] = (h @ e - e @ h, e)
        pairs[f"[H,F]=-F ({i})"] = (h @ f - f @ h, f.scale(-1))
        pairs[f"[E,F]=2H ({i})"] = (e @ f - f @ e, h.scale(2))
        ident = Matrix.identity(range(rep.size))
        pairs[f"casimir ({i})"] = (casimir_matrix(rep.hw), ident.scale(rep.lam * (rep.lam + 1)))
        c = qdet_scalar(rep)
        pairs[f"qdet ({i})"] = (qdet_matrix(rep), ident.map(lambda x: x * c if x else x))
    out.append(_compare("sl2_and_qdet", p, pairs))

    r = r_matrix(p, "gauss")
    col = r.column((0, 0))
    ok = col == {(0, 0): 1}
    out.append(CheckReport("R|0,0>=|0,0>", ok,
                           None if ok else {"column": {str(k): str(v) for k, v in col.items()}},
                           p.echo()))
    out.append(check_unitarity(p, "gauss"))

    weight = total_weight_op(p.rep1, p.rep2)
    pairs = {}
    for fam in FAMILIES:
        for direction in ("forward", "inverse"):
            f = build_twist(p, TwistVariant(fam, direction))
            pairs[f"{fam} {direction}"] = (f @ weight, weight @ f)
    out.append(_compare("twist_weight_preservation", p, pairs))
    return out


SUITES: Dict[str, Callable[[TwistParams], List[CheckReport]]] = {
    "diag": diag_suite,
    "closed": closed_suite,
    "cocomm": cocomm_suite,
    "factor": factor_suite,
    "intertwine": intertwine_suite,
    "sanity": sanity_suite,
}


def run_suite(p: TwistParams, name: str) -> List[CheckReport]:
    """Run one named suite, or every suite for ``"all"``.

    A pole raised while building an object propagates unchanged.
    """
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](p)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](p)
