"""Command-line front end.

Exit codes: 0 success, 1 identity mismatch, 2 usage or domain error,
3 resource guard tripped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import asm as asm_mod
from . import identity
from . import partitions as pt
from . import tspp as tspp_mod
from .errors import DomainError, ResourceGuardError, StructuralError, VerificationFailure
from .exactring import VarSet, parse_polynomial
from .schur import schur_expand, xnames

ENV_PREFIX = "ASMTSPP_"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _env(name, default):
    return os.environ.get(ENV_PREFIX + name, default)


def _env_flag(name):
    return _env(name, "").lower() in ("1", "true", "yes", "on")


# ----------------------------------------------------------------------------
# rendering


def format_factored(fac) -> str:
    if fac is None:
        return "-"
    if isinstance(fac, dict):
        fac = (fac["unit"], fac["alpha"], fac["beta"], fac["gamma"])
    unit, a, b, c = fac
    return f"{unit} · u^{a} (1-u-v)^{b} v^{c}"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


EXPANSION_HEADER = ["partition", "frobenius", "coefficient", "unit", "alpha", "beta", "gamma", "lgv"]


def _expansion_csv_rows(rows):
    out = []
    for r in rows:
        fac = r.get("factored") or {}
        out.append([
            " ".join(map(str, r["partition"])), r["frobenius"], r["coefficient"],
            fac.get("unit", ""), fac.get("alpha", ""), fac.get("beta", ""), fac.get("gamma", ""),
            r.get("lgv", ""),
        ])
    return out


def _expansion_text(rows) -> list[str]:
    lines = [f"{'partition':<16} {'frobenius':<14} {'factored':<28} {'lgv':>4}  coefficient"]
    for r in rows:
        lam = "(" + ",".join(map(str, pt.trim(r["partition"]))) + ")"
        lines.append(f"{lam:<16} {r['frobenius']:<14} {format_factored(r.get('factored')):<28} "
                     f"{r.get('lgv', ''):>4}  {r['coefficient']}")
    return lines


def render(report: identity.VerificationReport, fmt: str = "text", timings: bool = False) -> str:
    """Serialize a verification report; byte-stable unless ``timings`` is set."""
    if fmt == "json":
        return json.dumps(report.to_json(timings), indent=2) + "\n"
    if report.kind == "refined":
        terms = report.refined.get("uvz_terms", [])
        if fmt == "csv":
            return _csv([(t["a"], t["b"], t["i"], t["count"]) for t in terms], ["a", "b", "i", "count"])
        lines = [f"A_{report.n}(u,v;z,1,...,1) vs ASM statistics: {'PASS' if report.passed else 'FAIL'}"]
        for key, ok in report.equalities.items():
            lines.append(f"  {key:<24} {ok}")
        lines.append(f"  total ASMs {report.refined.get('total')}  "
                     f"product formula {report.refined.get('product_formula')}  "
                     f"2-enumeration {report.refined.get('two_enumeration')}")
        lines.append(f"{'inv':>4} {'inv_c':>6} {'col':>4} {'count':>6}")
        for t in terms:
            lines.append(f"{t['a']:>4} {t['b']:>6} {t['i']:>4} {t['count']:>6}")
        for f in report.failures:
            lines.append(f"FAILURE {json.dumps(f, sort_keys=True)}")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        return _csv(_expansion_csv_rows(report.expansion), EXPANSION_HEADER)
    lines = [
        f"A_{report.n}(u,v;x) Schur expansion: {'PASS' if report.passed else 'FAIL'}",
        f"omega convention: {report.omega_convention}   vandermonde: {report.vandermonde}",
        "routes:",
    ]
    for name, r in report.routes.items():
        extra = f"  {r.millis:.1f} ms" if timings else ""
        lines.append(f"  {name:<16} {r.hash[:16]}{extra}")
    lines.append("checks:")
    for key, ok in report.equalities.items():
        lines.append(f"  {key:<36} {ok}")
    lines.append(f"expansion ({len(report.expansion)} terms):")
    lines.extend("  " + line for line in _expansion_text(report.expansion))
    for f in report.failures:
        lines.append(f"FAILURE {json.dumps(f, sort_keys=True)}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# subcommands


def cmd_verify(args) -> tuple[str, int]:
    routes = [r.strip() for r in args.routes.split(",")] if args.routes else list(identity.ROUTES)
    report = identity.verify_main(args.n, args.omega_convention, args.extended, routes, args.threads)
    out = render(report, args.format, args.timings)
    ok = report.passed
    if args.refined:
        poly = report.routes["definition"].polynomial if "definition" in report.routes else None
        refined = identity.verify_refined(args.n, args.extended, poly)
        ok = ok and refined.passed
        if args.format == "json":
            data = report.to_json(args.timings)
            data["refined"] = {**refined.refined, "equalities": refined.equalities,
                               "failures": refined.failures, "pass": refined.passed}
            data["pass"] = ok
            out = json.dumps(data, indent=2) + "\n"
        else:
            out += "\n" + render(refined, args.format, args.timings)
    return out, EXIT_OK if ok else EXIT_FAIL


def cmd_expand(args) -> tuple[str, int]:
    name = args.route or "definition"
    poly = identity.compute_routes(args.n, [name], args.omega_convention, args.extended)[name].polynomial
    expansion = schur_expand(poly, xnames(args.n))
    rows = expansion.to_json()
    for r in rows:
        lam = pt.trim(r["partition"])
        r["lgv"] = tspp_mod.lgv_count(lam) if pt.is_modified_balanced(lam, args.n) else 0
    if args.format == "json":
        return json.dumps({"n": args.n, "route": name, "expansion": rows}, indent=2) + "\n", EXIT_OK
    if args.format == "csv":
        return _csv(_expansion_csv_rows(rows), EXPANSION_HEADER), EXIT_OK
    lines = [f"A_{args.n}(u,v;x) via {name}: {len(rows)} Schur terms"] + _expansion_text(rows)
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_asm(args) -> tuple[str, int]:
    rows = asm_mod.csv_rows(args.n, args.extended)
    header = ["n", "top_col", "minus_count", "inv", "inv_c", "count"]
    if args.format == "csv":
        return _csv(rows, header), EXIT_OK
    if args.format == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n", EXIT_OK
    total = sum(r[-1] for r in rows)
    lines = [f"{args.n}x{args.n} ASMs: {total} (product formula {asm_mod.product_formula(args.n)})",
             " ".join(f"{h:>11}" for h in header)]
    lines += [" ".join(f"{x:>11}" for x in r) for r in rows]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_tspp(args) -> tuple[str, int]:
    n = args.n
    if args.histogram:
        hist = tspp_mod.histogram_by_pi(n, args.extended)
        rows = []
        ok = True
        for lam in pt.enumerate_modified_balanced(n):
            count, lgv = hist.get(lam, 0), tspp_mod.lgv_count(lam)
            ok = ok and count == lgv
            rows.append((" ".join(map(str, pt.pad(lam, n))), str(pt.to_frobenius(lam)), count, lgv))
        ok = ok and set(hist) <= set(pt.enumerate_modified_balanced(n))
        code = EXIT_OK if ok else EXIT_FAIL
        header = ["partition", "frobenius", "tspps", "lgv"]
        if args.format == "csv":
            return _csv(rows, header), code
        if args.format == "json":
            return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n", code
        lines = [f"TSPPs in the ({n - 1},{n - 1},{n - 1})-box by pi: {sum(hist.values())} total, "
                 f"{'match' if ok else 'MISMATCH'}"]
        lines += [f"  {r[0]:<16} {r[1]:<14} {r[2]:>5} {r[3]:>5}" for r in rows]
        return "\n".join(lines) + "\n", code
    items = [tspp_mod.to_json(t, args.omega_convention) for t in tspp_mod.enumerate_tspps(n - 1, args.extended)]
    if args.format == "json":
        return json.dumps(items, indent=2) + "\n", EXIT_OK
    if args.format == "csv":
        rows = [(i, "/".join("".join(map(str, r)) for r in it["matrix"]), " ".join(map(str, it["diag"])),
                 " ".join(map(str, it["pi"])), it["omega"]["alpha"], it["omega"]["beta"], it["omega"]["gamma"])
                for i, it in enumerate(items)]
        return _csv(rows, ["index", "matrix", "diag", "pi", "alpha", "beta", "gamma"]), EXIT_OK
    lines = [f"{len(items)} TSPPs in the ({n - 1},{n - 1},{n - 1})-box"]
    for it in items:
        mat = "/".join("".join(map(str, r)) for r in it["matrix"]) or "-"
        o = it["omega"]
        lines.append(f"  {mat:<24} diag=({','.join(map(str, it['diag']))}) pi={it['pi_frobenius']} "
                     f"omega=u^{o['alpha']} (1-u-v)^{o['beta']} v^{o['gamma']}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_dyck(args) -> tuple[str, int]:
    if args.path:
        path = args.path.replace(" ", "")
        lam = pt.dyck_decode(path)
        n = len(path) // 2
    else:
        if args.partition is None:
            raise StructuralError("dyck needs --partition or --path")
        lam = pt.parse_partition(args.partition)
        n = args.n
        if n is None:
            raise StructuralError("dyck --partition needs --n")
        path = pt.dyck_encode(lam, n)
    back = pt.dyck_decode(path)
    ok = pt.trim(back) == pt.trim(lam)
    data = {
        "n": n,
        "partition": list(pt.pad(lam, n)),
        "frobenius": str(pt.to_frobenius(lam)),
        "path": path,
        "runs": pt.format_dyck(path),
        "roundtrip": list(pt.pad(back, n)),
    }
    code = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return json.dumps(data, indent=2) + "\n", code
    if args.format == "csv":
        return _csv([(" ".join(map(str, data["partition"])), data["frobenius"], path)],
                    ["partition", "frobenius", "path"]), code
    lines = [data["runs"], f"partition {pt.format_partition(data['partition'])} = {data['frobenius']}",
             f"roundtrip {pt.format_partition(data['roundtrip'])} {'ok' if ok else 'MISMATCH'}"]
    return "\n".join(lines) + "\n", code


def cmd_lemma(args) -> tuple[str, int]:
    default_f, default_g = identity.lemma_pair()
    vs = VarSet(["u", "v", "X"])
    f = parse_polynomial(args.f, vs) if args.f else default_f
    g = parse_polynomial(args.g, vs) if args.g else default_g
    res = identity.lemma_check(f, g, args.n, extended=args.extended)
    code = EXIT_OK if res.equal else EXIT_FAIL
    data = {"n": args.n, "f": f.render(), "g": g.render(), "equal": res.equal,
            "lhs_hash": identity.poly_hash(res.lhs), "rhs_hash": identity.poly_hash(res.rhs),
            "terms": len(res.lhs)}
    if args.format == "json":
        return json.dumps(data, indent=2) + "\n", code
    if args.format == "csv":
        return _csv([list(data.values())], list(data)), code
    lines = [f"det(f(X_i)^j - g(X_i)^j) vs asym prod (f(X_j) - g(X_i)), n={args.n}",
             f"  f = {data['f']}", f"  g = {data['g']}",
             f"  {'EQUAL' if res.equal else 'DIFFERENT'} ({data['terms']} terms, sha256 {data['lhs_hash'][:16]})"]
    return "\n".join(lines) + "\n", code


COMMANDS = {
    "verify": cmd_verify,
    "expand": cmd_expand,
    "asm": cmd_asm,
    "tspp": cmd_tspp,
    "dyck": cmd_dyck,
    "lemma": cmd_lemma,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--extended", action="store_true", default=_env_flag("EXTENDED"),
                        help="lift the desk-scale size guards")
    common.add_argument("--threads", type=int, default=int(_env("THREADS", "1")),
                        help="worker processes for independent routes")
    common.add_argument("--omega-convention", choices=tspp_mod.CONVENTIONS,
                        default=_env("OMEGA_CONVENTION", "section4"))
    common.add_argument("--timings", action="store_true", help="include wall-clock timings (not byte-stable)")

    parser = argparse.ArgumentParser(prog="asmtspp", description="Schur expansion of A_n(u,v;x): routes and checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check that all routes agree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--routes", help="comma list from: " + ",".join(identity.ROUTES))
    p.add_argument("--refined", action="store_true", help="also compare with brute-force ASM statistics")

    p = sub.add_parser("expand", parents=[common], help="Schur expansion table of A_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=identity.ROUTES)

    p = sub.add_parser("asm", parents=[common], help="ASM counts by (top_col, minus_count, inv, inv_c)")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("tspp", parents=[common], help="TSPPs in the (n-1)-box with diag, pi and omega")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--histogram", action="store_true", help="counts by pi against the LGV determinant")

    p = sub.add_parser("dyck", parents=[common], help="modified balanced partition <-> Dyck path")
    p.add_argument("--n", type=int)
    p.add_argument("--partition", help='parts "3,2,2,2,1" or Frobenius "(2,0|4,2)"')
    p.add_argument("--path", help="Dyck path over N/E")

    p = sub.add_parser("lemma", parents=[common], help="antisymmetrizer-to-determinant identity check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", help="polynomial in X (and u, v); default u*X")
    p.add_argument("--g", help="polynomial in X (and u, v); default -(1-u-v)-v*X")
    return parser


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if getattr(args, "n", None) is not None and args.n < 1:
        print(f"error: --n must be a positive integer, got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    try:
        out, code = COMMANDS[args.command](args)
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (DomainError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
