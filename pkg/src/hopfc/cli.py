"""Command-line interface: verification, contraction, and R-matrix checks
with reproducible JSON/text reports.

Exit codes: 0 all checks pass, 1 check failure, 2 usage/lookup error,
3 divergence under a forced exponent or limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import catalog, rmatrix
from .contraction import change_of_basis, contract_hopf, match_presentation, solve_min_exponents
from .errors import DivergenceError, HopfcError, LookupError_
from .hopf import verify_all

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DIVERGENCE = 3


def _parse_force(items):
    out = {}
    for item in items or []:
        if "=" not in item:
            raise ValueError(f"--force-exponent expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k] = int(v)
    return out


def _emit(report, args):
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=False)
    else:
        lines = [f"{report['config']['command']}  (catalog {report['catalog_version']})"]
        for c in report["checks"]:
            mark = "PASS" if c["verdict"] == "pass" else "FAIL"
            lines.append(f"  [{mark}] {c['name']}" + (f"  {c['details']}" if c.get("details") else ""))
            for r in c.get("residual", [])[:8]:
                lines.append(f"         residual: {r}")
        lines.append(f"  elapsed: {report['timing']:.3f}s")
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _report(args, checks, elapsed):
    cfg = {k: v for k, v in sorted(vars(args).items())
           if k not in ("func",) and v is not None}
    cfg["command"] = args.command
    return {
        "config": cfg,
        "catalog_version": catalog.CATALOG_VERSION,
        "checks": checks,
        "timing": round(elapsed, 6),
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_verify(args):
    if args.list:
        for n in catalog.names():
            print(n)
        return EXIT_PASS
    if not args.names:
        print("verify: no algebra names given (try --list)", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    checks = []
    ok = True
    for name in args.names:
        rep = verify_all(catalog.get(name, args.order))
        ok = ok and rep.ok
        for e in rep.entries:
            item = e.to_json()
            item["name"] = f"{name}.{item['name']}"
            checks.append(item)
    _emit(_report(args, checks, time.perf_counter() - t0), args)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_contract(args):
    if args.list:
        for meta in catalog.list_cases():
            print(json.dumps(meta))
        return EXIT_PASS
    if not args.cases:
        print("contract: no case names given (try --list)", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    checks = []
    ok = True
    force = _parse_force(args.force_exponent)
    for name in args.cases:
        case = catalog.get_case(name)
        sol = solve_min_exponents(case)
        minima_ok = sol.r_min == {g: case.expected_exponents.get(g) for g in sol.r_min}
        checks.append({
            "name": f"{name}.min_exponents",
            "verdict": "pass" if minima_ok else "fail",
            "details": json.dumps(sol.to_json(), sort_keys=True),
        })
        checks.append({
            "name": f"{name}.coboundary",
            "verdict": "pass" if sol.coboundary else "fail",
            "details": f"r minima {sol.r_min} vs delta minima {sol.delta_min}",
        })
        ok = ok and minima_ok and sol.coboundary
        got = contract_hopf(case, args.order, force_exponents=force or None)
        want = catalog.get(case.target, args.order)
        m = match_presentation(got, want)
        checks.append({
            "name": f"{name}.match_target",
            "verdict": "pass" if m.match else "fail",
            "residual": [str(r) for r in m.residuals],
            "details": f"target {case.target}",
        })
        ok = ok and m.match
        if args.then_basis_change:
            if case.target != "h4.betaplus.xi":
                print(f"contract: --then-basis-change only applies to the "
                      f"case targeting h4.betaplus.xi, not {name}", file=sys.stderr)
                return EXIT_USAGE
            primed = change_of_basis(catalog.get(case.target, args.order),
                                     catalog.basis_change_map(args.order))
            m2 = match_presentation(primed, catalog.get("h4.xi", args.order))
            checks.append({
                "name": f"{name}.basis_change_match",
                "verdict": "pass" if m2.match else "fail",
                "residual": [str(r) for r in m2.residuals],
                "details": "target h4.xi",
            })
            ok = ok and m2.match
    _emit(_report(args, checks, time.perf_counter() - t0), args)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_rmatrix(args):
    t0 = time.perf_counter()
    checks = []
    ok = True
    R = rmatrix.get_rmat(args.name, args.order, exact=args.exact_r)
    for sym in args.limit or []:
        sym = sym.split("=", 1)[0]
        R = rmatrix.rmat_limit(R, sym)
    run_all = not (args.qybe or args.exp_check or args.triangularity)

    if args.qybe or run_all:
        res = rmatrix.qybe_residual(R)
        good = rmatrix.mat_is_zero(res)
        checks.append({
            "name": "qybe",
            "verdict": "pass" if good else "fail",
            "residual": [f"{k}: {v}" for k, v in rmatrix.mat_nonzero_entries(res)[:8]],
        })
        ok = ok and good
    if args.exp_check:
        r = catalog.classical_r(args.name)
        E = rmatrix.exp_wedge_rep(r, args.order)
        series_R = rmatrix.get_rmat(args.name, args.order, exact=False)
        diff = rmatrix.mat_sub(E, series_R)
        good = rmatrix.mat_is_zero(diff)
        checks.append({
            "name": "exp_check",
            "verdict": "pass" if good else "fail",
            "residual": [f"{k}: {v}" for k, v in rmatrix.mat_nonzero_entries(diff)[:8]],
        })
        ok = ok and good
    if args.triangularity:
        res = rmatrix.triangularity_residual(R)
        good = rmatrix.mat_is_zero(res)
        checks.append({
            "name": "triangularity",
            "verdict": "pass" if good else "fail",
            "residual": [f"{k}: {v}" for k, v in rmatrix.mat_nonzero_entries(res)[:8]],
        })
        ok = ok and good
    _emit(_report(args, checks, time.perf_counter() - t0), args)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_dump(args):
    payload = catalog.dump(args.name, args.order)
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="hopfc",
        description="Exact checks for quantum gl(2) algebras, their oscillator "
                    "contractions, and 4x4 R-matrices.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--order", type=int, default=catalog.DEFAULT_ORDER,
                        help="series truncation order N (default 4)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write the report to this path")

    v = sub.add_parser("verify", help="run the full axiom suite on catalog algebras")
    v.add_argument("names", nargs="*")
    v.add_argument("--list", action="store_true", help="list catalog algebra names")
    common(v)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("contract", help="run contraction cases end to end")
    c.add_argument("cases", nargs="*")
    c.add_argument("--list", action="store_true", help="list contraction cases")
    c.add_argument("--then-basis-change", action="store_true",
                   help="additionally apply the primed-basis map and match the "
                        "single-parameter oscillator target")
    c.add_argument("--force-exponent", action="append", metavar="k=v",
                   help="override a parameter's eps exponent (repeatable)")
    common(c)
    c.set_defaults(func=cmd_contract)

    r = sub.add_parser("rmatrix", help="4x4 R-matrix checks")
    r.add_argument("name")
    r.add_argument("--exact-r", action="store_true",
                   help="exact polynomial mode instead of truncated series")
    r.add_argument("--qybe", action="store_true")
    r.add_argument("--exp-check", action="store_true",
                   help="compare against exp of the classical r-matrix")
    r.add_argument("--triangularity", action="store_true")
    r.add_argument("--limit", action="append", metavar="sym",
                   help="take a parameter's zero-slice first (repeatable)")
    common(r)
    r.set_defaults(func=cmd_rmatrix)

    d = sub.add_parser("dump", help="dump a catalog presentation as JSON")
    d.add_argument("name")
    common(d)
    d.set_defaults(func=cmd_dump)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", 1) < 1:
        print("hopfc: --order must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except LookupError_ as exc:
        print(f"hopfc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"hopfc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DivergenceError as exc:
        print(f"hopfc: divergence: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE
    except HopfcError as exc:
        print(f"hopfc: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
