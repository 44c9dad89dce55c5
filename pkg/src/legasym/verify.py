"""Identity residuals with the asymptotic forms substituted, their sweeps, and the target checks.

Each quantity below is identically 1 for the exact functions; inserting
truncated expansions makes it deviate by roughly the truncation error.

* ``R``: ``Gamma(nu+mu+2) {(mu-nu-1) P^{-mu}_nu Q^mu_{nu+1} + P^{-mu}_{nu+1} Q^mu_nu}``
  from the direct large-degree composites, on the curves AB, BC, CD
  bounding ``|z-1| >= 1/2``, ``Re z >= 0``; ``Rhat`` is the same on the
  circle ``t = 1 + e^{i theta}`` used for the Cauchy integral.
* ``Rbar``: the Ferrers cross product with the re-expanded coefficients.
* ``S``: the Ferrers reflection product with the large-order LG forms.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

import mpmath

from . import expand
from .arith import Side, current_precision, set_precision, to_mp
from .cauchy import Contour, cauchy_eval, curve_max, l_zero, sample_grid
from .errors import DomainError
from .oracle import R_complex, R_ferrers, S_ferrers, identity_suite

SCHEMA_VERSION = 1
CD_CUTOFF = mpmath.mpf(1000)
S_X_MAX = "0.999"  # converted at working precision


def load_targets() -> dict:
    text = resources.files("legasym").joinpath("data/targets.json").read_text(encoding="utf-8")
    return json.loads(text)["targets"]


# ---------------------------------------------------------------------------
# residuals


def R_value(z, u="20.8", mu="4.2", N: int = 11, side: Side | None = None):
    """``R`` with all four functions from the direct composites (no Cauchy path)."""
    u = to_mp(u)
    mu = to_mp(mu)
    nu = u - mpmath.mpf(0.5)

    def f(which, n):
        return expand.legendre_large_nu(which, n, mu, z, N, side, r=0).value

    return R_complex(f("P_minus", nu), f("Q", nu), f("P_minus", nu + 1), f("Q", nu + 1), nu, mu)


def _ferrers_at_one(nu, mu, N):
    # leading behaviour as x -> 1 (eta -> 0) of the Bessel forms:
    # P ~ C (u eta/2)^mu A/Gamma(mu+1),  Q ~ (C/2)(2/(u eta))^mu {Gamma(mu) A - 2 Gamma(mu+1) B/u}
    # with C = L Gamma(nu-mu+1); the eta-powers cancel in the cross product
    u = nu + mpmath.mpf(0.5)
    A, B, _ = expand.ferrers_AB(mu, u, mpmath.mpf(1), N, expand.Method.REEXPANDED)
    C = expand.L_const(nu, mu) * mpmath.gamma(nu - mu + 1)
    return u, C, A, B


def Rbar_value(x, u="20.8", mu="4.2", N: int = 5):
    """``Rbar`` with the re-expanded coefficients; ``x = 1`` by its limit."""
    u = to_mp(u)
    mu = to_mp(mu)
    x = to_mp(x)
    nu = u - mpmath.mpf(0.5)
    if x == 1:
        u0, C0, A0, B0 = _ferrers_at_one(nu, mu, N)
        u1, C1, A1, B1 = _ferrers_at_one(nu + 1, mu, N)
        g = mpmath.gamma(mu)
        g1 = mpmath.gamma(mu + 1)
        cross = C0 * C1 / (2 * g1) * (
            (u1 / u0) ** mu * A1 * (g * A0 - 2 * g1 * B0 / u0)
            - (u0 / u1) ** mu * A0 * (g * A1 - 2 * g1 * B1 / u1))
        return mpmath.gamma(nu + mu + 2) * mpmath.rgamma(nu - mu + 1) * cross

    def f(which, n):
        return expand.ferrers_large_nu(which, n, mu, x, N, method=expand.Method.REEXPANDED).value

    return R_ferrers(f("P", nu), f("Q", nu), f("P", nu + 1), f("Q", nu + 1), nu, mu)


def S_value(x, nu="4.8", mu="20.3", N: int = 10):
    """``S`` from the large-order LG forms at ``+x`` and ``-x``."""
    nu = to_mp(nu)
    mu = to_mp(mu)
    x = to_mp(x)

    def f(sign, n):
        return expand.ferrers_large_mu_LG(sign, mu, x, N, nu=n).value

    return S_ferrers(f(1, nu), f(-1, nu), f(1, nu + 1), f(-1, nu + 1), nu, mu)


# ---------------------------------------------------------------------------
# curves


@dataclass(frozen=True)
class Curve:
    name: str
    quantity: str  # R, Rhat, Rbar or S
    a: object
    b: object
    description: str

    def point(self, t):
        """``(z or x, side)`` at parameter ``t``."""
        t = to_mp(t)
        if self.name == "AB":
            return 1 + mpmath.expj(t) / 2, None
        if self.name == "BC":
            # beta = -i y  <->  z = x + i0 with x = y / sqrt(1 + y^2)
            return mpmath.mpc(t / mpmath.sqrt(1 + t * t)), Side.ABOVE
        if self.name == "CD":
            # beta in [0, 1)  <->  z = i beta / sqrt(1 - beta^2)
            z = mpmath.mpc(0, t / mpmath.sqrt(1 - t * t))
            return z, (Side.ABOVE if t == 0 else None)
        if self.name == "circle":
            t_ = 1 + mpmath.expj(t)
            if abs(mpmath.im(t_)) < mpmath.eps * 8:
                t_ = mpmath.mpc(mpmath.re(t_))
            return t_, (Side.ABOVE if mpmath.re(t_) <= 1 and mpmath.im(t_) == 0 else None)
        return t, None


def curves() -> dict:
    bmax = CD_CUTOFF / mpmath.sqrt(1 + CD_CUTOFF**2)
    return {
        "AB": Curve("AB", "R", 0, mpmath.pi, "z = 1 + e^{i theta}/2, 0 <= theta <= pi"),
        "BC": Curve("BC", "R", 0, 1 / mpmath.sqrt(3), "beta = -i y, 0 <= y <= 1/sqrt(3)"),
        "CD": Curve("CD", "R", 0, bmax, "beta in [0, 1), z = i t up to |z| = 1e3"),
        "circle": Curve("circle", "Rhat", 0, mpmath.pi, "t = 1 + e^{i theta}, 0 <= theta <= pi"),
        "ferrers-R": Curve("ferrers-R", "Rbar", 0, 1, "x in [0, 1]"),
        "ferrers-S": Curve("ferrers-S", "S", 0, mpmath.mpf(S_X_MAX), "x in [0, 0.999]"),
    }


def residual(curve: Curve, t, params: dict | None = None):
    """``|Q - 1|`` for the curve's quantity at parameter ``t``."""
    params = params or {}
    pt, side = curve.point(t)
    if curve.quantity in ("R", "Rhat"):
        v = R_value(pt, side=side, **params)
    elif curve.quantity == "Rbar":
        v = Rbar_value(pt, **params)
    elif curve.quantity == "S":
        v = S_value(pt, **params)
    else:
        raise DomainError(f"unknown quantity {curve.quantity}", tag="verify")
    return abs(v - 1)


def _worker(args):
    name, t, params, digits = args
    set_precision(digits)
    return residual(curves()[name], mpmath.mpf(t), params)


def sweep_values(curve: Curve, samples: int, params: dict | None = None, workers: int = 1):
    """Residuals on the equispaced grid, in parameter order."""
    ts = sample_grid(curve.a, curve.b, samples)
    if workers <= 1:
        return ts, [residual(curve, t, params) for t in ts]
    digits = current_precision().digits
    # parameters cross process boundaries as decimal strings
    jobs = [(curve.name, mpmath.nstr(t, digits + 5), params or {}, digits) for t in ts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        vals = list(pool.map(_worker, jobs))
    return ts, vals


def sweep_csv(curve: Curve, ts, vals, params: dict | None = None) -> str:
    """CSV text: a versioned comment line, a column header, then one row per sample."""
    digits = current_precision().digits
    buf = io.StringIO()
    meta = " ".join(f"{k}={v}" for k, v in sorted((params or {}).items()))
    buf.write(f"# legasym-sweep schema={SCHEMA_VERSION} curve={curve.name} quantity={curve.quantity} "
              f"digits={digits} {meta}".rstrip() + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["param", "re_point", "im_point", "residual"])
    for t, v in zip(ts, vals):
        pt, _ = curve.point(t)
        pt = mpmath.mpmathify(pt)
        w.writerow([mpmath.nstr(t, digits), mpmath.nstr(mpmath.re(pt), digits),
                    mpmath.nstr(mpmath.im(pt), digits), mpmath.nstr(v, 12)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    name: str
    passed: bool
    measured: dict
    targets: dict
    failures: list = field(default_factory=list)
    sweeps: dict = field(default_factory=dict)  # curve name -> CSV text

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "measured": self.measured,
                "targets": self.targets, "failures": self.failures}


def _s(v, n=12):
    return mpmath.nstr(v, n)


def _rel_ok(measured, spec):
    return abs(measured / to_mp(spec["value"]) - 1) <= to_mp(spec["rel_tol"])


def _max_on(curve, samples, params, workers, xtol):
    ts, vals = sweep_values(curve, samples, params, workers)
    best, arg = curve_max(lambda t: residual(curve, t, params), curve.a, curve.b, samples, xtol, values=vals)
    return best, arg, sweep_csv(curve, ts, vals, params)


def verify_R_complex(samples: int = 256, workers: int = 1, params: dict | None = None) -> Report:
    tg = load_targets()["R-complex"]
    meas, sweeps = {}, {}
    best = (mpmath.mpf(0), None, None)
    for name in ("AB", "BC", "CD"):
        m, arg, text = _max_on(curves()[name], samples, params, workers, mpmath.mpf("1e-7"))
        meas[name] = {"max": _s(m), "argmax": _s(arg)}
        sweeps[name] = text
        if m > best[0]:
            best = (m, arg, name)
    meas["max"] = _s(best[0])
    meas["curve"] = best[2]
    meas["argmax"] = _s(best[1])
    fails = []
    if not _rel_ok(best[0], tg["max"]):
        fails.append(f"max {meas['max']} vs {tg['max']['value']}")
    if best[2] != tg["argmax"]["curve"] or abs(best[1] - to_mp(tg["argmax"]["theta"])) > to_mp(tg["argmax"]["abs_tol"]):
        fails.append(f"argmax {best[2]} theta={meas['argmax']} vs {tg['argmax']['curve']} theta={tg['argmax']['theta']}")
    return Report("R-complex", not fails, meas, tg, fails, sweeps)


def l0_max():
    """Maximum of ``l_0`` over ``|z - 1| <= 1/2`` (it is radial, so over ``[1/2, 3/2]``)."""
    c = Contour(1, 1)
    ends = {"0.5": l_zero(mpmath.mpf("0.5"), c), "1.5": l_zero(mpmath.mpf("1.5"), c)}
    inner, arg = curve_max(lambda x: l_zero(x, c), mpmath.mpf("0.5"), mpmath.mpf("1.5"), 64)
    return max(inner, *ends.values()), ends, arg


def verify_R_cauchy(samples: int = 256, workers: int = 1, params: dict | None = None,
                    integral_points=()) -> Report:
    """Max of ``|Rhat - 1|`` on the circle, the ``l_0`` maximum and the resulting bound.

    ``integral_points`` optionally adds the Cauchy integral of ``Rhat`` at
    interior points, which must lie within the bound of 1.
    """
    tg = load_targets()["R-cauchy"]
    circle = curves()["circle"]
    m, arg, text = _max_on(circle, samples, params, workers, mpmath.mpf("1e-7"))
    lmax, ends, _ = l0_max()
    bound = m * lmax / (2 * mpmath.pi)
    meas = {"max": _s(m), "argmax": _s(arg), "l0_max": _s(lmax, 15),
            "l0_at": {k: _s(v, 15) for k, v in ends.items()}, "bound": _s(bound)}
    fails = []
    if not _rel_ok(m, tg["max"]):
        fails.append(f"max {meas['max']} vs {tg['max']['value']}")
    if abs(arg - to_mp(tg["argmax"]["theta"])) > to_mp(tg["argmax"]["abs_tol"]):
        fails.append(f"argmax {meas['argmax']} vs {tg['argmax']['theta']}")
    for k, v in ends.items():
        if abs(v - to_mp(tg["l0_max"]["value"])) > to_mp(tg["l0_max"]["abs_tol"]):
            fails.append(f"l0({k}) = {_s(v, 15)} vs {tg['l0_max']['value']}")
    if not _rel_ok(bound, tg["bound"]):
        fails.append(f"bound {meas['bound']} vs {tg['bound']['value']}")
    if integral_points:
        def f(t):
            side = Side.ABOVE if mpmath.im(t) == 0 and mpmath.re(t) <= 1 else None
            return R_value(t, side=side, **(params or {}))

        meas["integral"] = {}
        for z in integral_points:
            d = abs(cauchy_eval(f, Contour(1, 1), z, cache_key=("Rhat", tuple(sorted((params or {}).items())))) - 1)
            meas["integral"][_s(z, 6)] = _s(d)
            if d >= bound:
                fails.append(f"Cauchy integral at {z} misses the bound: {_s(d)}")
    return Report("R-cauchy", not fails, meas, tg, fails, {"circle": text})


def verify_R_ferrers(samples: int = 256, workers: int = 1, params: dict | None = None) -> Report:
    tg = load_targets()["R-ferrers"]
    m, arg, text = _max_on(curves()["ferrers-R"], samples, params, workers, mpmath.mpf("1e-8"))
    meas = {"max": _s(m), "argmax": _s(arg)}
    fails = []
    if not _rel_ok(m, tg["max"]):
        fails.append(f"max {meas['max']} vs {tg['max']['value']}")
    if abs(arg - to_mp(tg["argmax"]["x"])) > max(to_mp(tg["argmax"]["abs_tol"]), mpmath.mpf("1e-6")):
        fails.append(f"argmax {meas['argmax']} vs {tg['argmax']['x']}")
    return Report("R-ferrers", not fails, meas, tg, fails, {"ferrers-R": text})


def verify_S_ferrers(samples: int = 256, workers: int = 1, params: dict | None = None) -> Report:
    tg = load_targets()["S-ferrers"]
    m, arg, text = _max_on(curves()["ferrers-S"], samples, params, workers, mpmath.mpf("1e-8"))
    meas = {"max": _s(m), "argmax": _s(arg)}
    fails = []
    if not _rel_ok(m, tg["max"]):
        fails.append(f"max {meas['max']} vs {tg['max']['value']}")
    if abs(arg - to_mp(tg["argmax"]["x"])) > to_mp(tg["argmax"]["abs_tol"]):
        fails.append(f"argmax {meas['argmax']} vs {tg['argmax']['x']}")
    return Report("S-ferrers", not fails, meas, tg, fails, {"ferrers-S": text})


DEFAULT_IDENTITY_GRID = {
    "nu": "3.3", "mu": "1.1",
    "zs": ["1.4", "0.3-0.4j", "1.5+0.5j", "-2+0.5j"],
    "xs": ["0.5", "-0.3"],
}


def verify_identities(nu=None, mu=None, zs=None, xs=None) -> Report:
    """Exact identities among oracle values; pass when all residuals are below ``10^{-(P-8)}``."""
    g = DEFAULT_IDENTITY_GRID
    nu = to_mp(nu if nu is not None else g["nu"])
    mu = to_mp(mu if mu is not None else g["mu"])
    zs = [mpmath.mpmathify(complex(z) if isinstance(z, str) and "j" in z else z) for z in (zs or g["zs"])]
    xs = [to_mp(x) for x in (xs or g["xs"])]
    res = identity_suite(nu, mu, zs, xs)
    tol = mpmath.mpf(10) ** (-(current_precision().digits - 8))
    meas = {f"{k[0]}@{_s(k[1], 6)}": _s(v, 4) for k, v in res.items()}
    fails = [k for k, v in zip(meas, res.values()) if v >= tol]
    meas["max"] = _s(max(res.values(), default=0), 4)
    return Report("identities", not fails, meas, {"tolerance": _s(tol, 3)}, fails)


VERIFIERS = {
    "R-complex": verify_R_complex,
    "R-cauchy": verify_R_cauchy,
    "R-ferrers": verify_R_ferrers,
    "S-ferrers": verify_S_ferrers,
    "identities": verify_identities,
}
