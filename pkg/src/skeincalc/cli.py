"""Command-line verification harness and expression explorer.

Two subcommands:

  verify   run one verification suite (or all of them) over a parameter grid,
           print a per-check report, exit 0 exactly when every check passed
  expand   print a named family member or a reduced basis expression as JSON

Grid points are independent, so --jobs N runs them in a process pool; results
are merged in task order, so output is deterministic regardless of job count.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coeffs import t
from .handlebody import CHEBYSHEV, MONOMIAL, HbElement, hb_mul
from .families import (big_x, big_x_closed, sigma, x1_T_closed, x1_T_recursive,
                       x1y1_recursive, y1_T_closed, y1_T_recursive)
from .torusknot import (Convention, JonesSequence, handle_slide_residual,
                        induction_residual, reduce_sy, rt_recursion_residual,
                        telescope_residual)
from . import qtorus

SUITES = ("families", "handle-slide", "telescope", "rt-recursion", "qtorus",
          "t1-factor")


@dataclass
class VerificationReport:
    suite: str
    grid: dict
    checks: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def all_pass(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "grid": self.grid, "checks": self.checks,
                "elapsed_ms": self.elapsed_ms}


def _hb_residual(a: HbElement, b: HbElement):
    resid = a.to_basis(MONOMIAL) - b.to_basis(MONOMIAL)
    return resid.is_zero(), None if resid.is_zero() else resid.to_json()


def _tk_residual(resid):
    return resid.is_zero(), None if resid.is_zero() else resid.to_json()


def _chk_x1_T(p, n):
    return _hb_residual(x1_T_closed(n), x1_T_recursive(n))


def _chk_y1_T(p, n):
    return _hb_residual(y1_T_closed(n), y1_T_recursive(n))


def _chk_sigma(p, n):
    xz_t = hb_mul(HbElement.mono({(1, 0, 1): t(-1)}), HbElement.cheb_t_y(n))
    defined = x1_T_recursive(n) * t(1) + xz_t
    return _hb_residual(sigma(n), defined)


def _chk_big_x(p, n):
    return _hb_residual(big_x_closed(n), big_x(n))


def _chk_handle_slide(p, n):
    return _tk_residual(handle_slide_residual(p, n))


def _chk_telescope(p, n):
    return _tk_residual(telescope_residual(p, n))


def _chk_induction(p, n):
    return _tk_residual(induction_residual(p, n))


def _chk_rt_recursion(p, n):
    return _tk_residual(rt_recursion_residual(p, n))


def _chk_mixed_annihilates(p, n):
    f = JonesSequence(p, Convention.RT)
    return _tk_residual(qtorus.qt_apply(qtorus.inhomog_recurrence(p), f, n))


def _chk_recurrence_annihilates(p, n):
    f = JonesSequence(p, Convention.RT)
    return _tk_residual(qtorus.qt_apply(qtorus.recurrence_poly(p), f, n))


def _chk_product_identity(p, n):
    resid = (qtorus.qt_mul(qtorus.product_multiplier(p), qtorus.inhomog_recurrence(p))
             - qtorus.recurrence_poly(p))
    return resid.is_zero(), None if resid.is_zero() else resid.to_json()


def _chk_homogenization(p, n):
    return qtorus.homogenization_check(p), None


def _chk_t1_factor(p, n):
    return qtorus.t1_factor_check(p), None


_CHECKS = {
    "x1_T_closed_vs_recursion": _chk_x1_T,
    "y1_T_closed_vs_recursion": _chk_y1_T,
    "sigma_closed_vs_defining": _chk_sigma,
    "big_x_closed_vs_recursion": _chk_big_x,
    "handle_slide": _chk_handle_slide,
    "a_n_telescope": _chk_telescope,
    "induction_identity": _chk_induction,
    "rt_recursion": _chk_rt_recursion,
    "mixed_operator_annihilates": _chk_mixed_annihilates,
    "recurrence_poly_annihilates": _chk_recurrence_annihilates,
    "product_identity": _chk_product_identity,
    "homogenization": _chk_homogenization,
    "t1_factorization": _chk_t1_factor,
}


def _run_check(task):
    name, p, n = task
    ok, residual = _CHECKS[name](p, n)
    return {"check": name, "p": p, "n": n, "pass": bool(ok), "residual": residual}


def _families_tasks(p_max, n_max):
    tasks = []
    for n in range(1, n_max + 1):
        tasks.append(("x1_T_closed_vs_recursion", None, n))
        tasks.append(("y1_T_closed_vs_recursion", None, n))
        tasks.append(("sigma_closed_vs_defining", None, n))
    for i in range(0, n_max + 1):
        tasks.append(("big_x_closed_vs_recursion", None, i))
    return tasks


def _handle_slide_tasks(p_max, n_max):
    return [("handle_slide", p, n)
            for p in range(1, p_max + 1)
            for n in range(1, min(2 * p + 4, n_max) + 1)]


def _telescope_tasks(p_max, n_max):
    tasks = []
    for p in range(1, p_max + 1):
        for n in range(0, min(2 * p + 4, n_max) + 1):
            tasks.append(("a_n_telescope", p, n))
            tasks.append(("induction_identity", p, n))
    return tasks


def _rt_recursion_tasks(p_max, n_max):
    return [("rt_recursion", p, n)
            for p in range(1, p_max + 1)
            for n in range(-(p + 2), min(2 * p + 3, n_max) + 1)]


def _qtorus_tasks(p_max, n_max):
    tasks = []
    for p in range(1, p_max + 1):
        for n in range(-(p + 2), min(2 * p + 3, n_max) + 1):
            tasks.append(("mixed_operator_annihilates", p, n))
            tasks.append(("recurrence_poly_annihilates", p, n))
        tasks.append(("product_identity", p, None))
        tasks.append(("homogenization", p, None))
    return tasks


def _t1_tasks(p_max, n_max):
    return [("t1_factorization", p, None) for p in range(1, p_max + 1)]


_SUITE_BUILDERS = {
    "families": _families_tasks,
    "handle-slide": _handle_slide_tasks,
    "telescope": _telescope_tasks,
    "rt-recursion": _rt_recursion_tasks,
    "qtorus": _qtorus_tasks,
    "t1-factor": _t1_tasks,
}


def run_suite(suite: str, p_max: int, n_max: int, jobs: int = 1) -> VerificationReport:
    tasks = _SUITE_BUILDERS[suite](p_max, n_max)
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(_run_check, tasks))
    else:
        checks = [_run_check(task) for task in tasks]
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    grid = {"p_max": p_max, "n_max": n_max}
    return VerificationReport(suite, grid, checks, round(elapsed_ms, 3))


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    failed = 0
    for suite in suites:
        report = run_suite(suite, args.p_max, args.n_max, args.jobs)
        reports.append(report)
        npass = sum(1 for c in report.checks if c["pass"])
        total = len(report.checks)
        status = "ok" if report.all_pass else "FAIL"
        print(f"{status:4} {suite:12} {npass}/{total} checks passed "
              f"({report.elapsed_ms:.0f} ms)")
        for check in report.checks:
            if not check["pass"]:
                failed += 1
                loc = " ".join(f"{k}={check[k]}" for k in ("p", "n")
                               if check[k] is not None)
                print(f"     FAIL {check['check']} {loc}")
                if check["residual"] is not None:
                    print(f"          residual: {json.dumps(check['residual'])}")
    if args.json:
        payload = reports[0].to_json() if len(reports) == 1 else \
            [r.to_json() for r in reports]
        text = json.dumps(payload, indent=2)
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w") as fh:
                fh.write(text + "\n")
    return 0 if failed == 0 else 1


_FAMILY_ALIASES = {"X": "x1y", "Y": "y1y"}


def cmd_expand(args) -> int:
    family = _FAMILY_ALIASES.get(args.family, args.family)
    n = args.index
    try:
        if family == "x1y":
            elem = x1y1_recursive(n).xpart
        elif family == "y1y":
            elem = x1y1_recursive(n).ypart
        elif family == "x1t":
            elem = x1_T_closed(n)
        elif family == "y1t":
            elem = y1_T_closed(n)
        elif family == "sigma":
            elem = sigma(n)
        elif family == "bigx":
            elem = big_x(n)
        elif family == "reduce":
            elem = reduce_sy(n, args.p, Convention(args.convention))
        else:
            print(f"unknown family {args.family!r}; choose from "
                  f"x1y y1y x1t y1t sigma bigx reduce", file=sys.stderr)
            return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(elem, HbElement):
        elem = elem.to_basis(args.basis)
    if args.pretty:
        print(str(elem))
    else:
        print(json.dumps(elem.to_json(), indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeincalc",
        description="Exact verifier for torus-knot skein-module identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", default="all", choices=("all",) + SUITES)
    verify.add_argument("--p-max", type=int, default=3, dest="p_max")
    verify.add_argument("--n-max", type=int, default=10, dest="n_max")
    verify.add_argument("--json", metavar="PATH",
                        help="write the JSON report here ('-' for stdout)")
    verify.add_argument("--jobs", type=int, default=1,
                        help="run grid points in N worker processes")
    verify.set_defaults(func=cmd_verify)

    expand = sub.add_parser("expand", help="print one family member as JSON")
    expand.add_argument("family",
                        help="x1y, y1y, x1t, y1t, sigma, bigx, or reduce "
                             "(X and Y are aliases for x1y and y1y)")
    expand.add_argument("--index", "-i", type=int, required=True,
                        help="family index n (for reduce: the y-index N)")
    expand.add_argument("--basis", default=CHEBYSHEV,
                        choices=(MONOMIAL, CHEBYSHEV),
                        help="output basis for handlebody elements")
    expand.add_argument("--p", type=int, default=1,
                        help="knot parameter (reduce only)")
    expand.add_argument("--convention", default="kbsm", choices=("kbsm", "rt"),
                        help="reduction convention (reduce only)")
    expand.add_argument("--pretty", action="store_true",
                        help="print a human-readable expression instead of JSON")
    expand.set_defaults(func=cmd_expand)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "p_max", 1) < 1 or getattr(args, "n_max", 1) < 1:
        parser.error("--p-max and --n-max must be positive")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
