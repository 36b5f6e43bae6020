"""Command-line front end.

Output contract: one JSON object per invocation
    {"schema_version": ..., "command": ..., "config": ..., "result": ...}
or CSV (UTF-8, a `# schema_version=...` line, a header row, 17-significant-
digit reals).  Errors are serialized as {"error": {code, message, context}}
with a nonzero exit code.  Flags can also be supplied via environment
variables with the prefix ICG2T_ (e.g. ICG2T_FORMAT, ICG2T_BUDGET,
ICG2T_SEED, ICG2T_CHUNK); explicit flags win.

Field and column names are frozen in schema.json, shipped with the package.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources

from . import arith2adic, discrepancy, fexpansion, meanvalue, sums
from .corpus import child_rng
from .errors import BudgetError, DomainError
from .generator import GeneratorParams, closed_form_traj, iterate, validate_matrix
from .kernels import BACKEND
from .verify import VerifyOptions, run_all

SCHEMA = json.loads(resources.files("icg2t").joinpath("schema.json").read_text())
SCHEMA_VERSION = SCHEMA["schema_version"]

_ENV_PREFIX = "ICG2T_"


def _env_default(name, cast, fallback):
    raw = os.environ.get(_ENV_PREFIX + name.upper())
    if raw is None:
        return fallback
    return cast(raw)


def _fmt(x):
    """17-significant-digit text for reals; ints and strings pass through."""
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, float):
        return "%.17g" % x
    if x is None:
        return ""
    return str(x)


def _emit_json(cfg, command, result, out):
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": cfg,
        "result": result,
    }
    out.write(json.dumps(doc, sort_keys=True) + "\n")


def _emit_csv(columns, rows, out):
    out.write(f"# schema_version={SCHEMA_VERSION}\n")
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(_fmt(v) for v in row) + "\n")


def _params_from_args(args):
    return GeneratorParams(g=args.g, a=args.a, b=args.b, c=args.c, t=args.t)


def _config_dict(args):
    skip = {"func", "format"}
    return {
        k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None
    }


# ---------------------------------------------------------------- commands


def cmd_gen(args, out):
    if args.from_matrix is not None:
        entries = [int(x) for x in args.from_matrix.split(",")]
        if len(entries) != 4 or args.u0 is None:
            raise DomainError("--from-matrix needs m11,m12,m21,m22 and --u0")
        mat = validate_matrix(*entries, args.t)
        traj = iterate(mat, args.u0, args.L, args.N)
    else:
        traj = closed_form_traj(_params_from_args(args), args.L, args.N)
    m = 1 << args.t
    rows = [(args.L + i, u, u / m) for i, u in enumerate(traj.values)]
    if args.format == "csv":
        _emit_csv(SCHEMA["commands"]["gen"]["csv_columns"], rows, out)
    else:
        _emit_json(
            _config_dict(args), "gen",
            {"rows": [{"n": n, "u": u, "x": x} for n, u, x in rows]}, out,
        )


def cmd_order(args, out):
    info = arith2adic.mult_order(args.g, args.s)
    rec = {
        "g": info.g, "s": info.s, "beta": info.beta, "tau": info.tau,
        "w_beta": info.w_beta, "w_s": info.w_s, "degenerate": info.degenerate,
    }
    if args.format == "csv":
        cols = SCHEMA["commands"]["order"]["csv_columns"]
        _emit_csv(cols, [tuple(rec[c] for c in cols)], out)
    else:
        _emit_json(_config_dict(args), "order", rec, out)


def cmd_sum(args, out):
    p = _params_from_args(args)
    series = sums.exp_sum(p, args.h, args.L, args.N, chunk=args.chunk)
    rec = {
        "re": series.value.real, "im": series.value.imag,
        "magnitude": series.magnitude, "abs_error": series.abs_error,
    }
    if args.format == "csv":
        row = (args.t, args.g, args.a, args.b, args.c, args.h, args.L, args.N,
               rec["re"], rec["im"], rec["magnitude"], rec["abs_error"])
        _emit_csv(SCHEMA["commands"]["sum"]["csv_columns"], [row], out)
    else:
        _emit_json(_config_dict(args), "sum", rec, out)


def cmd_spectrum(args, out):
    p = _params_from_args(args)
    rep = sums.spectrum(p, args.L, args.N, budget=args.budget, chunk=args.chunk)
    if args.format == "csv":
        rows = [(h, float(mag)) for h, mag in enumerate(rep.magnitudes)]
        _emit_csv(SCHEMA["commands"]["spectrum"]["csv_columns"], rows, out)
    else:
        _emit_json(
            _config_dict(args), "spectrum",
            {
                "max_odd": rep.max_odd,
                "parseval_total": rep.parseval_total,
                "magnitudes": [float(m) for m in rep.magnitudes],
                "backend": BACKEND,
            },
            out,
        )


def _discrepancy_report(p, start, count, big_h):
    ps = discrepancy.points_from_params(p, start, count)
    exact = discrepancy.exact_discrepancy(ps)
    mags = [sums.exp_sum(p, h, start, count).magnitude for h in range(1, big_h + 1)]
    et = discrepancy.erdos_turan_bound(mags, count, big_h)
    tb = discrepancy.theorem_bounds(count, p.t, p.order.beta or 3)
    odd_max = max(mags[0::2], default=0.0)  # h = 1, 3, 5, ...
    eta = discrepancy.empirical_exponent(count, p.t, odd_max)
    return discrepancy.DiscrepancyReport(
        exact=exact, et_bound=et, H=big_h, thm2_bound=tb.thm2, rho=tb.rho,
        empirical_eta=eta,
    )


def cmd_discrepancy(args, out):
    p = _params_from_args(args)
    rep = _discrepancy_report(p, args.L, args.N, args.H)
    rec = {
        "exact": rep.exact, "et_bound": rep.et_bound, "H": rep.H,
        "thm2_bound": rep.thm2_bound, "rho": rep.rho,
        "empirical_eta": rep.empirical_eta,
    }
    if args.format == "csv":
        row = (args.t, args.g, args.a, args.b, args.c, args.L, args.N, args.H,
               rep.exact, rep.et_bound, rep.thm2_bound, rep.rho, rep.empirical_eta)
        _emit_csv(SCHEMA["commands"]["discrepancy"]["csv_columns"], [row], out)
    else:
        _emit_json(_config_dict(args), "discrepancy", rec, out)


def cmd_meanvalue(args, out):
    fn = meanvalue.count_solutions_naive if args.naive else meanvalue.count_solutions
    mv = fn(args.k, args.n, args.M)
    fb = meanvalue.ford_bound(args.n, args.k, args.M)
    rec = {
        "count": mv.count, "method": mv.method.value,
        "ford_log2": fb.log2_value,
        "ford_n_in_range": fb.n_in_range, "ford_k_in_range": fb.k_in_range,
    }
    if args.format == "csv":
        row = (args.k, args.n, args.M, mv.count, mv.method.value,
               fb.log2_value, fb.n_in_range, fb.k_in_range)
        _emit_csv(SCHEMA["commands"]["meanvalue"]["csv_columns"], [row], out)
    else:
        _emit_json(_config_dict(args), "meanvalue", rec, out)


def cmd_fexp(args, out):
    p = GeneratorParams(g=args.g, a=1, b=args.b, c=0, t=args.t)
    fe = fexpansion.build_F(p, args.s)
    check_n = [int(x) for x in args.check_n.split(",")] if args.check_n else []
    congruence = {str(n): fexpansion.congruence_check(fe, n) for n in check_n}
    phases = None
    if args.h is not None:
        poly = fexpansion.reduce_phases(fe, args.h, args.shift)
        phases = [str(f) for f in poly.coefficients]
    rec = {
        "kappa": fe.kappa, "s": fe.s, "tau_s": fe.tau_s, "w": fe.w,
        "coeffs": [str(c) for c in fe.coeffs],
        "omegas": fe.omegas,
        "congruence": congruence,
        "phases": phases,
    }
    if args.format == "csv":
        rows = []
        for ell, got, expected in fexpansion.coeff_valuations(fe):
            rows.append((ell, str(fe.coeffs[ell]), got, expected))
        _emit_csv(SCHEMA["commands"]["fexp"]["csv_columns"], rows, out)
    else:
        _emit_json(_config_dict(args), "fexp", rec, out)


def cmd_korobov(args, out):
    q_list = [int(x) for x in args.q.split(",")]
    count = meanvalue.count_solutions(args.k, args.n, args.M).count
    inp = sums.KorobovInput(
        k=args.k, n=args.n, M=args.M, q_list=q_list, meanvalue_count=count
    )
    rhs = sums.korobov_rhs(inp)
    rec = {"meanvalue_count": count, "rhs_log2": rhs}
    if args.format == "csv":
        row = (args.k, args.n, args.M, inp.q_max, count, rhs)
        _emit_csv(SCHEMA["commands"]["korobov"]["csv_columns"], [row], out)
    else:
        _emit_json(_config_dict(args), "korobov", rec, out)


def _parse_grid(spec_text):
    """Comma list of window sizes; `A..B` expands to powers of two 2^A..2^B."""
    out = []
    for part in spec_text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(1 << e for e in range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _scan_row(p, n, h_samples, seed, with_parseval, budget):
    rng = child_rng(seed, f"scan:{p.t}:{n}")
    m = p.modulus
    pool = range(1, m, 2)
    hs = sorted(rng.sample(pool, min(h_samples, m // 2)))
    max_mag = max(sums.exp_sum(p, h, 0, n).magnitude for h in hs)
    ps = discrepancy.points_from_params(p, 0, n)
    exact_d = discrepancy.exact_discrepancy(ps)
    rho = math.log(n) / p.t
    thm2 = n ** (-rho * rho)
    eta = discrepancy.empirical_exponent(n, p.t, max_mag)
    parseval = None
    truncated = False
    if with_parseval:
        try:
            parseval = sums.spectrum(p, 0, n, budget=budget).parseval_total
        except (BudgetError, DomainError):
            truncated = True
    return (p.t, n, rho, max_mag / n, len(hs), exact_d, thm2, eta, parseval, truncated)


def cmd_scan(args, out):
    p = _params_from_args(args)
    grid = _parse_grid(args.N_grid)
    if any(n < 2 for n in grid):
        raise DomainError("scan windows must have N >= 2")
    with ThreadPoolExecutor(max_workers=min(8, os.cpu_count() or 1)) as pool:
        futures = [
            pool.submit(
                _scan_row, p, n, args.h_samples, args.seed, args.with_parseval,
                args.budget,
            )
            for n in grid
        ]
        rows = [f.result() for f in futures]  # ordered by grid index
    cols = SCHEMA["commands"]["scan"]["csv_columns"]
    if args.format == "json":
        _emit_json(
            _config_dict(args), "scan",
            {"rows": [dict(zip(cols, row)) for row in rows]}, out,
        )
    else:
        _emit_csv(cols, rows, out)


def cmd_verify(args, out):
    opts = VerifyOptions(
        seed=args.seed, et_c1=args.et_c1, et_c2=args.et_c2, quick=args.quick
    )
    results = run_all(opts)
    all_ok = all(r.ok for r in results)
    if args.format == "csv":
        rows = [(r.name, r.ok, json.dumps(r.detail, sort_keys=True)) for r in results]
        _emit_csv(SCHEMA["commands"]["verify"]["csv_columns"], rows, out)
    else:
        _emit_json(
            _config_dict(args), "verify",
            {
                "all_ok": all_ok,
                "checks": [
                    {"check": r.name, "ok": r.ok, "detail": r.detail} for r in results
                ],
            },
            out,
        )
    return 0 if all_ok else 1


# ---------------------------------------------------------------- parser


def _add_common(sub):
    sub.add_argument(
        "--format", choices=("json", "csv"),
        default=_env_default("format", str, "json"),
    )
    sub.add_argument(
        "--budget", type=int, default=_env_default("budget", int, sums.DEFAULT_BUDGET)
    )
    sub.add_argument(
        "--chunk", type=int, default=_env_default("chunk", int, sums.DEFAULT_CHUNK)
    )
    sub.add_argument("--seed", type=int, default=_env_default("seed", int, 0))


def _add_params(sub, need_all=True):
    sub.add_argument("--t", type=int, required=need_all)
    sub.add_argument("--g", type=int, default=3)
    sub.add_argument("--a", type=int, default=1)
    sub.add_argument("--b", type=int, default=0)
    sub.add_argument("--c", type=int, default=0)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="icg2t",
        description="Inversive congruential generators mod 2^t: sequences, "
        "exponential sums, exact discrepancy, and the verification suite.",
    )
    sp = ap.add_subparsers(dest="command", required=True)

    p = sp.add_parser("gen", help="emit n, u_n, u_n/2^t rows")
    _add_params(p)
    p.add_argument("--L", type=int, default=0)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--from-matrix", dest="from_matrix")
    p.add_argument("--u0", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_gen)

    p = sp.add_parser("order", help="multiplicative order of g mod 2^s")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_order)

    p = sp.add_parser("sum", help="exponential sum S_h(L, N)")
    _add_params(p)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--L", type=int, default=0)
    p.add_argument("--N", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_sum)

    p = sp.add_parser("spectrum", help="|S_h| for every h mod 2^t")
    _add_params(p)
    p.add_argument("--L", type=int, default=0)
    p.add_argument("--N", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sp.add_parser("discrepancy", help="exact discrepancy and bounds")
    _add_params(p)
    p.add_argument("--L", type=int, default=0)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--H", type=int, default=16)
    _add_common(p)
    p.set_defaults(func=cmd_discrepancy)

    p = sp.add_parser("meanvalue", help="mean-value count N_{k,n}(M)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--naive", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_meanvalue)

    p = sp.add_parser("fexp", help="polynomial expansion of the subsequence")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--check-n", dest="check_n")
    p.add_argument("--h", type=int)
    p.add_argument("--shift", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_fexp)

    p = sp.add_parser("korobov", help="double-sum bound right-hand side")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--q", required=True, help="comma list of denominators")
    _add_common(p)
    p.set_defaults(func=cmd_korobov)

    p = sp.add_parser("scan", help="sweep window sizes into a table")
    _add_params(p)
    p.add_argument(
        "--N-grid", dest="N_grid", required=True,
        help="comma list of N values; A..B expands to 2^A..2^B",
    )
    p.add_argument("--h-samples", dest="h_samples", type=int, default=32)
    p.add_argument("--with-parseval", dest="with_parseval", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_scan, format=_env_default("format", str, "csv"))

    p = sp.add_parser("verify", help="run the machine-verification suite")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--et-c1", dest="et_c1", type=float, default=3.0)
    p.add_argument("--et-c2", dest="et_c2", type=float, default=3.0)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        rv = args.func(args, out)
    except (DomainError, BudgetError) as exc:
        doc = {
            "error": {
                "code": type(exc).__name__,
                "message": str(exc),
                "context": _config_dict(args),
            }
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return 2
    return rv or 0


if __name__ == "__main__":
    sys.exit(main())
