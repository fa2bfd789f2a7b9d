"""Command-line entry point: build twists and R-matrices, run checks and pole scans.

Exit status: 0 success, 1 a check failed (output still written), 2 usage or
parameter error, 3 the requested object has a pole at these parameters.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .evaluation import EtaMismatchError, TruncationError
from .exact import PoleError, format_rational, parse_rational
from .linalg import Matrix
from .report import CheckReport
from .rmatrix import METHODS, r_matrix
from .sl2 import InvalidWeightError
from .spectra import UnsupportedRepError, scan_poles
from .suites import SUITES, run_suite
from .twist import FAMILIES, TwistParams, TwistVariant, build_twist, build_twist_block

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_POLE = 0, 1, 2, 3

_NEGATIVE_VALUE = re.compile(r"^-\d[\d/,\-]*$")


@dataclass
class RunConfig:
    command: str
    lambda1: Fraction
    lambda2: Fraction
    eta: Fraction = Fraction(1)
    delta1: Optional[Fraction] = None
    delta2: Optional[Fraction] = None
    cutoff1: Optional[int] = None
    cutoff2: Optional[int] = None
    family: str = "F"
    direction: str = "forward"
    swapped: bool = False
    block: Optional[int] = None
    method: str = "gauss"
    suite: str = "all"
    candidates: List[Fraction] = field(default_factory=list)
    format: str = "json"
    output: Optional[str] = None

    def params(self) -> TwistParams:
        return TwistParams.make(self.lambda1, self.lambda2, self.delta1, self.delta2,
                                self.eta, self.cutoff1, self.cutoff2)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str) -> List[Fraction]:
    return [_rational(t.strip()) for t in text.split(",") if t.strip()]


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="yangtwist", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, deltas=True):
        p.add_argument("--lambda1", type=_rational, required=True)
        p.add_argument("--lambda2", type=_rational, required=True)
        if deltas:
            p.add_argument("--delta1", type=_rational, required=True)
            p.add_argument("--delta2", type=_rational, required=True)
        p.add_argument("--eta", type=_rational, default=Fraction(1))
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
        p.add_argument("--output", help="write here instead of standard output")

    tw = sub.add_parser("twist", help="twist matrix for one family and direction")
    common(tw)
    tw.add_argument("--cutoff1", type=int)
    tw.add_argument("--cutoff2", type=int)
    tw.add_argument("--family", choices=FAMILIES, default="F")
    tw.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    tw.add_argument("--swapped", action="store_true", help="the F_21-type object")
    tw.add_argument("--block", type=int, help="restrict to the weight block l+k=BLOCK")

    rm = sub.add_parser("rmatrix", help="R-matrix normalized by its character")
    common(rm)
    rm.add_argument("--method", choices=METHODS, default="gauss")

    ch = sub.add_parser("check", help="run exact property checks")
    common(ch)
    ch.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")

    sc = sub.add_parser("scan", help="attempt F_12 and its inverse at candidate points")
    common(sc, deltas=False)
    sc.add_argument("--candidates", type=_rational_list, required=True,
                    help="comma-separated values of (delta1-delta2)/eta")
    return top


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    """``--opt -1/2`` becomes ``--opt=-1/2`` so argparse does not read a flag."""
    out: List[str] = []
    for tok in argv:
        if (out and out[-1].startswith("--") and "=" not in out[-1]
                and _NEGATIVE_VALUE.match(tok)):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = _parser().parse_args(_join_negative_values(argv))
    kwargs = {k: v for k, v in vars(ns).items() if v is not None}
    return RunConfig(**kwargs)


# rendering ---------------------------------------------------------------


def _dumps(data) -> str:
    return json.dumps(data, sort_keys=True) + "\n"


def _label(b) -> str:
    return "|" + ",".join(str(x) for x in b) + ">" if isinstance(b, tuple) else str(b)


def _matrix_csv(m: Matrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "col", "entry"])
    for i, r in enumerate(m.rows):
        for j, c in enumerate(m.cols):
            x = m.entries[i][j]
            if x:
                w.writerow([_label(r), _label(c), str(x)])
    return buf.getvalue()


def _matrix_pretty(m: Matrix, title: str) -> str:
    cells = [[""] + [_label(c) for c in m.cols]]
    for i, r in enumerate(m.rows):
        cells.append([_label(r)] + [str(x) if x else "0" for x in m.entries[i]])
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    lines = [title]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _reports_csv(reports: List[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "item", "passed"])
    for r in reports:
        if r.details and all(isinstance(v, bool) for v in r.details.values()):
            for k, v in r.details.items():
                w.writerow([r.name, k, v])
        else:
            w.writerow([r.name, "", r.passed])
    return buf.getvalue()


def _scan_csv(report: CheckReport) -> str:
    rows = report.details["candidates"]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["value"],
                       lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _scan_pretty(report: CheckReport) -> str:
    lines = [f"pole scan {report.params}: {'consistent' if report.passed else 'INCONSISTENT'}"]
    for row in report.details["candidates"]:
        lines.append(f"  {row['value']:>6}  F12 {'ok  ' if row['f12_built'] else 'pole'}"
                     f"  F12^-1 {'ok  ' if row['f12_inv_built'] else 'pole'}"
                     f"  reducible={row['predicted_reducible']}"
                     f"  consistent={row['consistent']}")
    return "\n".join(lines) + "\n"


# commands ------------------------------------------------------------------


def _run_twist(cfg: RunConfig):
    p = cfg.params()
    v = TwistVariant(cfg.family, cfg.direction, cfg.swapped)
    m = build_twist(p, v) if cfg.block is None else build_twist_block(p, v, cfg.block)
    meta = {"family": cfg.family, "direction": cfg.direction, "swapped": cfg.swapped,
            "params": p.echo()}
    if cfg.block is not None:
        meta["block"] = cfg.block
    title = f"{cfg.family} {cfg.direction}{' swapped' if cfg.swapped else ''} {p.echo()}"
    return _render_matrix(cfg, m, meta, title), True


def _run_rmatrix(cfg: RunConfig):
    p = cfg.params()
    m = r_matrix(p, cfg.method)
    meta = {"method": cfg.method, "params": p.echo()}
    return _render_matrix(cfg, m, meta, f"R ({cfg.method}) {p.echo()}"), True


def _render_matrix(cfg: RunConfig, m: Matrix, meta: dict, title: str) -> str:
    if cfg.format == "json":
        return _dumps(dict(meta, **m.to_json()))
    if cfg.format == "csv":
        return _matrix_csv(m)
    return _matrix_pretty(m, title)


def _run_check(cfg: RunConfig):
    p = cfg.params()
    reports = run_suite(p, cfg.suite)
    passed = all(reports)
    if cfg.format == "json":
        text = _dumps({"suite": cfg.suite, "params": p.echo(), "passed": passed,
                       "reports": [r.to_json() for r in reports]})
    elif cfg.format == "csv":
        text = _reports_csv(reports)
    else:
        text = "".join(f"{'PASS' if r else 'FAIL'}  {r.name}\n" for r in reports)
    return text, passed


def _run_scan(cfg: RunConfig):
    report = scan_poles(cfg.lambda1, cfg.lambda2, cfg.eta, cfg.candidates)
    if cfg.format == "json":
        text = _dumps(report.to_json())
    elif cfg.format == "csv":
        text = _scan_csv(report)
    else:
        text = _scan_pretty(report)
    return text, report.passed


_COMMANDS = {"twist": _run_twist, "rmatrix": _run_rmatrix, "check": _run_check,
             "scan": _run_scan}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        text, ok = _COMMANDS[cfg.command](cfg)
    except PoleError as exc:
        info = {"error": "pole", "message": str(exc),
                "argument": None if exc.argument is None else format_rational(exc.argument),
                "family": exc.family}
        if getattr(exc, "factor", None):
            info["factor"] = exc.factor
        print(json.dumps(info, sort_keys=True), file=stderr)
        return EXIT_POLE
    except (InvalidWeightError, TruncationError, EtaMismatchError,
            UnsupportedRepError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK if ok else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return EXIT_USAGE if exc.code else EXIT_OK
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
