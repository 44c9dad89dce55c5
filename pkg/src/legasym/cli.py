"""Command line front end: ``legasym eval | verify | sweep | coeffs``.

Numbers go out as decimal strings (JSON) or full-precision CSV fields.
Errors exit with the status carried by their :class:`LegasymError` class;
a failed verification exits with :data:`EXIT_VERIFY_FAILED`.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import mpmath

from . import coeffs, expand, verify
from .arith import Side, default_precision, set_precision
from .errors import ConfigurationError, LegasymError

EXIT_VERIFY_FAILED = 9
MIN_VERIFY_DIGITS = 32
MAX_COEFF_S = 16


def _num(s):
    if s is None:
        return None
    v = mpmath.mpmathify(s.replace("i", "j") if isinstance(s, str) else s)
    return v


def _side(s):
    return None if s is None else {"above": Side.ABOVE, "below": Side.BELOW}[s]


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _precision(args, floor: int | None = None):
    p = set_precision(args.digits) if args.digits else default_precision().install()
    if floor and p.digits < floor:
        raise ConfigurationError(f"this command needs at least {floor} digits, got {p.digits}")
    return p


# ---------------------------------------------------------------------------
# eval


def request_from_args(args) -> expand.RegimeRequest:
    opts = {}
    if args.method:
        opts["method"] = args.method
    kw = dict(
        regime=expand.Regime(args.regime),
        nu=_num(args.nu), mu=_num(args.mu), tau=_num(args.tau), rho=_num(args.rho),
        z=_num(args.z), x=_num(args.x), side=_side(args.side), N=args.N, sign=args.sign, options=opts,
    )
    if args.which:
        kw["which"] = args.which
    elif kw["regime"] in (expand.Regime.FERRERS_LARGE_NU,):
        kw["which"] = "P"
    if args.r is not None:
        kw["r"] = _num(args.r)
    if args.contour_radius is not None:
        kw["contour_radius"] = _num(args.contour_radius)
    return expand.RegimeRequest(**kw)


def eval_record(args) -> dict:
    res = expand.evaluate(request_from_args(args))
    rec = res.as_dict()
    rec["regime"] = args.regime
    return rec


def cmd_eval(args) -> int:
    _precision(args)
    rec = eval_record(args)
    if args.format == "json":
        _emit(json.dumps(rec, indent=2) + "\n", args.output)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = ["regime", "value_re", "value_im", "A_re", "A_im", "B_re", "B_im", "method", "N", "digits"]
        w.writerow(cols)

        def part(k, c):
            return (rec[k] or {}).get(c, "")

        w.writerow([rec["regime"], part("value", "re"), part("value", "im"), part("A", "re"), part("A", "im"),
                    part("B", "re"), part("B", "im"), rec["method"], rec["N"], rec["digits"]])
        _emit(buf.getvalue(), args.output)
    return 0


# ---------------------------------------------------------------------------
# verify and sweep


def _curve_params(args, quantity):
    p = {}
    if quantity in ("R", "Rhat", "Rbar"):
        if args.u:
            p["u"] = args.u
        if args.mu:
            p["mu"] = args.mu
    else:
        if args.nu:
            p["nu"] = args.nu
        if args.mu:
            p["mu"] = args.mu
    if args.N:
        p["N"] = args.N
    return p


_VERIFY_QUANTITY = {"R-complex": "R", "R-cauchy": "Rhat", "R-ferrers": "Rbar", "S-ferrers": "S"}


def cmd_verify(args) -> int:
    _precision(args, MIN_VERIFY_DIGITS)
    names = list(verify.VERIFIERS) if args.which == "all" else [args.which]
    ok = True
    out = []
    for name in names:
        if name == "identities":
            rep = verify.VERIFIERS[name]()
        else:
            kw = dict(samples=args.samples, workers=args.workers, params=_curve_params(args, _VERIFY_QUANTITY[name]))
            if name == "R-cauchy" and args.integral_at:
                kw["integral_points"] = [_num(z) for z in args.integral_at]
            rep = verify.VERIFIERS[name](**kw)
        ok = ok and rep.passed
        out.append(rep.as_dict())
        if args.sweep_dir:
            os.makedirs(args.sweep_dir, exist_ok=True)
            for curve, text in rep.sweeps.items():
                with open(os.path.join(args.sweep_dir, f"{name}_{curve}.csv"), "w", encoding="utf-8") as fh:
                    fh.write(text)
        status = "PASS" if rep.passed else "FAIL"
        print(f"{status} {name}: " + "; ".join(rep.failures or [f"max {rep.measured.get('max', '-')}"]),
              file=sys.stderr)
    _emit(json.dumps(out if len(out) > 1 else out[0], indent=2) + "\n", args.output)
    return 0 if ok else EXIT_VERIFY_FAILED


def cmd_sweep(args) -> int:
    _precision(args)
    table = verify.curves()
    if args.curve not in table:
        raise ConfigurationError(f"unknown curve {args.curve!r}; choose from {', '.join(table)}")
    curve = table[args.curve]
    params = _curve_params(args, curve.quantity)
    ts, vals = verify.sweep_values(curve, args.samples, params, args.workers)
    _emit(verify.sweep_csv(curve, ts, vals, params), args.output)
    return 0


# ---------------------------------------------------------------------------
# coeffs


def _poly_str(p, digits):
    return [mpmath.nstr(c, digits) for c in p.coeffs]


def coeffs_record(args) -> dict:
    digits = mpmath.mp.dps
    if args.S > MAX_COEFF_S or args.S < 1:
        raise ConfigurationError(f"S must be between 1 and {MAX_COEFF_S}")
    if args.large_mu:
        if (args.alpha is None) == (args.alpha_tilde is None):
            raise ConfigurationError("--large-mu needs exactly one of --alpha, --alpha-tilde")
        a2 = _num(args.alpha) ** 2 if args.alpha is not None else -_num(args.alpha_tilde) ** 2
        tab = coeffs.build_large_mu_F_E(a2, args.S)
        return {"variable": "p", "alpha_sq": mpmath.nstr(a2, digits),
                "F": [_poly_str(tab.F[s], digits) for s in range(1, args.S + 1)],
                "E": [_poly_str(tab.E[s], digits) for s in range(1, args.S + 1)]}
    if args.mu is None:
        raise ConfigurationError("give --mu, or --large-mu with --alpha/--alpha-tilde")
    mu = _num(args.mu)
    tab = coeffs.build_F_E(mu, args.S)
    return {"variable": "beta", "mu": mpmath.nstr(mu, digits),
            "F": [_poly_str(tab.F[s], digits) for s in range(1, args.S + 1)],
            "E": [_poly_str(tab.E[s], digits) for s in range(1, args.S + 1)],
            "a": [mpmath.nstr(tab.a[s], digits) for s in range(1, args.S + 1)]}


def cmd_coeffs(args) -> int:
    _precision(args)
    rec = coeffs_record(args)
    if args.format == "json":
        _emit(json.dumps(rec, indent=2) + "\n", args.output)
        return 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "s", "power", "coefficient"])
    for kind in ("F", "E"):
        for s, poly in enumerate(rec[kind], start=1):
            for k, c in enumerate(poly):
                w.writerow([kind, s, k, c])
    for s, c in enumerate(rec.get("a", []), start=1):
        w.writerow(["a", s, "", c])
    _emit(buf.getvalue(), args.output)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="legasym", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, help="significant digits (default: $LEGASYM_DIGITS or 40)")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate one function value")
    e.add_argument("--regime", required=True, choices=[r.value for r in expand.Regime])
    e.add_argument("--which", help="P_minus, Q, P_plus, Q_branch+, Q_branch-, P_hat, P, P_minus_conical")
    for name in ("nu", "mu", "tau", "rho", "z", "x", "r", "contour-radius"):
        e.add_argument(f"--{name}")
    e.add_argument("--side", choices=["above", "below"], help="side of the cut for real z <= 1")
    e.add_argument("--N", type=int)
    e.add_argument("--sign", type=int, default=1, choices=[1, -1])
    e.add_argument("--method", choices=["auto", "direct", "reexpanded"], help="Ferrers large-degree only")
    e.add_argument("--format", choices=["json", "csv"], default="json")
    e.set_defaults(func=cmd_eval)

    def curve_opts(p):
        p.add_argument("--samples", type=int, default=256)
        p.add_argument("--workers", type=int, default=1, help="processes for the sweep")
        p.add_argument("--u")
        p.add_argument("--nu")
        p.add_argument("--mu")
        p.add_argument("--N", type=int)

    v = sub.add_parser("verify", parents=[common], help="reproduce the recorded identity residuals")
    v.add_argument("which", choices=list(verify.VERIFIERS) + ["all"])
    curve_opts(v)
    v.add_argument("--sweep-dir", help="write each sweep as CSV into this directory")
    v.add_argument("--integral-at", nargs="*", help="R-cauchy: also integrate at these interior points")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", parents=[common], help="residual along a named curve, as CSV")
    s.add_argument("curve", help="AB, BC, CD, circle, ferrers-R or ferrers-S")
    curve_opts(s)
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("coeffs", parents=[common], help="dump coefficient polynomials")
    c.add_argument("--mu")
    c.add_argument("--S", type=int, default=4)
    c.add_argument("--large-mu", action="store_true", help="polynomials in p of the large-order LG form")
    c.add_argument("--alpha")
    c.add_argument("--alpha-tilde")
    c.add_argument("--format", choices=["json", "csv"], default="json")
    c.set_defaults(func=cmd_coeffs)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LegasymError as err:
        print(json.dumps({"error": err.code, "message": str(err)}), file=sys.stderr)
        return err.exit_status


if __name__ == "__main__":
    sys.exit(main())
