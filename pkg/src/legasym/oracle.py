"""Convergent-series reference values for P, Q and the Ferrers functions.

Test and validation use only; no evaluator in :mod:`legasym.expand` calls
into this module.  Everything is built from the scaled Gauss series

    F(a, b; c; w) = sum_s (a)_s (b)_s w^s / (Gamma(c + s) s!)

plus connection formulas that move the argument into a zone where the
series converges quickly.  mpmath supplies Gamma and the elementary
functions only.

Routes (``z`` on the plane cut along ``(-inf, 1]``):

* ``P^{-mu}_nu`` directly for ``|1 - z| <= 3/2``; for ``|z| >= 1.3`` from
  ``cos(nu pi) P^{-mu}_nu = Q^mu_{-nu-1}/Gamma(nu+mu+1) - Q^mu_nu/Gamma(mu-nu)``;
  otherwise by the half-turn ``P(z' e^{s pi i}) = e^{s nu pi i} P(z') + 2 Q(z')/Gamma(mu-nu)``.
* ``Q^mu_nu`` from the ``1/z^2`` series for ``|z| >= 1.3``, otherwise from
  ``2 sin(mu pi)/pi Q = P^{mu}/Gamma(nu+mu+1) - P^{-mu}/Gamma(nu-mu+1)``
  (Richardson in ``mu`` when ``sin(mu pi)`` is small), or the half-turn
  ``Q(z' e^{s pi i}) = -e^{-s nu pi i} Q(z')`` for ``Re z < 0``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import mpmath

from .arith import Side, clog, to_complex, to_mp
from .errors import DomainError, InternalConsistencyError, OracleGapError

W_MAX = mpmath.mpf("0.75")
P_ZONE = mpmath.mpf("1.5")  # |1 - z| <= 2 W_MAX
Q_ZONE = mpmath.mpf("1.3")
ORACLE_GUARD = 20  # extra digits carried through every oracle evaluation
NEAR_INTEGER = mpmath.mpf("1e-3")
MAX_TERMS = 200000


@dataclass(frozen=True)
class SeriesResult:
    value: object
    terms: int
    bound: object  # estimate of the neglected tail


def _is_nonpos_int(a) -> bool:
    a = to_complex(a)
    return a.imag == 0 and a.real <= 0 and a.real == int(a.real)


def _scaled_series(a, b, c, w, target_dps):
    s0 = int(-mpmath.re(c)) + 1 if _is_nonpos_int(c) else 0
    stops = [int(-mpmath.re(p)) for p in (a, b) if _is_nonpos_int(p)]
    stop = min(stops) if stops else None
    if stop is not None and stop < s0:
        return mpmath.mpc(0), 0, mpmath.mpf(0), mpmath.mpf(0)
    t = mpmath.rf(a, s0) * mpmath.rf(b, s0) * w**s0 / mpmath.factorial(s0) * mpmath.rgamma(c + s0)
    total = t
    big = abs(t)
    s = s0
    tol = mpmath.mpf(10) ** (-(target_dps + 2))
    smin = 2 * int(max(abs(a), abs(b), abs(c))) + 2
    aw = abs(w)
    bound = mpmath.mpf(0)
    while True:
        if w == 0 or (stop is not None and s >= stop):
            break
        t = t * (a + s) * (b + s) * w / ((c + s) * (s + 1))
        s += 1
        total += t
        big = max(big, abs(t))
        if s > smin:
            ratio = abs((a + s) * (b + s) * w / ((c + s) * (s + 1)))
            rho = max(ratio, aw)
            if rho < 1:
                bound = abs(t) * rho / (1 - rho)
                if bound <= tol * abs(total):
                    break
        if s - s0 > MAX_TERMS:
            raise DomainError("scaled 2F1 series did not converge", tag="hyp2f1_reg")
    return total, s - s0 + 1, bound, big


def hyp2f1_reg(a, b, c, w) -> SeriesResult:
    """Scaled Gauss function ``F(a, b; c; w) / Gamma(c)`` by its power series, ``|w| <= 3/4``.

    Entire in ``c``: at ``c = 0, -1, ...`` the leading terms vanish and the
    sum starts at ``s = 1 - c``.  Digits lost to cancellation between terms
    are recovered by re-summing with more guard digits.
    """
    w = to_complex(w)
    if abs(w) > W_MAX:
        raise DomainError(f"|w| = {mpmath.nstr(abs(w), 6)} exceeds the direct-series zone 3/4", tag="hyp2f1_reg")
    dps = mpmath.mp.dps
    guard = 15
    while True:
        with mpmath.workdps(dps + guard):
            val, n, bound, big = _scaled_series(to_complex(a), to_complex(b), to_complex(c), w, dps)
            loss = 0 if val == 0 or big == 0 else int(mpmath.log10(big / abs(val)))
        if loss < guard - 8:
            break
        guard = loss + 15
    return SeriesResult(+val, n, +bound)


def _guarded(fn):
    # run at raised precision and round the result back
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        with mpmath.workdps(mpmath.mp.dps + ORACLE_GUARD):
            val = fn(*args, **kwargs)
        return +val

    return wrapper


def _on_cut(z, cut_max=1):
    return z.imag == 0 and z.real <= cut_max


def _half_turn(z, side):
    """``(z', s, side')`` with ``z = z' e^{s pi i}`` on the principal sheet."""
    s = 1 if (z.imag > 0 or (z.imag == 0 and side is not Side.BELOW)) else -1
    zp = -z
    side_p = None
    if _on_cut(zp):
        side_p = Side.BELOW if s == 1 else Side.ABOVE
    return zp, s, side_p


def _check_side(z, side):
    if _on_cut(z) and side is None:
        raise DomainError("z lies on the cut; pass side=", tag="oracle")
    return side if _on_cut(z) else None


@_guarded
def P_ref(nu, mu, z, side: Side | None = None):
    """``P^{-mu}_nu(z) = ((z-1)/(z+1))^{mu/2} F(nu+1, -nu; 1+mu; 1/2 - z/2)`` for ``|1 - z| <= 3/2``."""
    nu = to_complex(nu)
    mu = to_complex(mu)
    z = to_complex(z)
    side = _check_side(z, side)
    if abs(1 - z) > P_ZONE:
        raise DomainError("z is outside the direct zone; use P_oracle (connection formulas)", tag="P_ref")
    F = hyp2f1_reg(nu + 1, -nu, 1 + mu, (1 - z) / 2).value
    if z == 1:
        return F if mu == 0 else mpmath.mpc(0)
    if z == -1:
        raise DomainError("z = -1 is singular", tag="P_ref")
    return mpmath.exp(mu / 2 * (clog(z - 1, side) - clog(z + 1, side))) * F


def _Q_series(nu, mu, z, side):
    # sqrt(pi)/2^{nu+1} z^{-nu-1} (1 - z^{-2})^{mu/2} F(nu/2+mu/2+1, nu/2+mu/2+1/2; nu+3/2; z^{-2})
    w = 1 / (z * z)
    F = hyp2f1_reg(nu / 2 + mu / 2 + 1, nu / 2 + mu / 2 + mpmath.mpf(0.5), nu + mpmath.mpf(1.5), w).value
    lz = clog(z, side)
    return mpmath.sqrt(mpmath.pi) / mpmath.power(2, nu + 1) * mpmath.exp(-(nu + 1) * lz) * mpmath.power(1 - w, mu / 2) * F


def _richardson(g, x0, k):
    # symmetric two-step Richardson for g removable at x0; error O(10^{-4k})
    h = mpmath.mpf(10) ** (-k)
    g1 = (g(x0 + h) + g(x0 - h)) / 2
    g2 = (g(x0 + h / 2) + g(x0 - h / 2)) / 2
    return (4 * g2 - g1) / 3


def _near_integer(x):
    x = to_complex(x)
    return abs(x.imag) < NEAR_INTEGER and abs(x.real - mpmath.nint(x.real)) < NEAR_INTEGER


def _Q_from_P(nu, mu, z, side):
    def q(m):
        pp = P_ref(nu, -m, z, side)
        pm = P_ref(nu, m, z, side)
        return mpmath.pi / (2 * mpmath.sin(m * mpmath.pi)) * (
            pp * mpmath.rgamma(nu + m + 1) - pm * mpmath.rgamma(nu - m + 1))

    if not _near_integer(mu):
        return q(mu)
    k = mpmath.mp.dps // 4 + 2
    with mpmath.workdps(mpmath.mp.dps + 2 * k):
        return _richardson(q, mu, k)


@_guarded
def Q_ref(nu, mu, z, side: Side | None = None):
    """Boldface ``Q^mu_nu(z)`` on the principal sheet."""
    nu = to_complex(nu)
    mu = to_complex(mu)
    z = to_complex(z)
    side = _check_side(z, side)
    if z == 1 or z == -1:
        raise DomainError("Q is singular at z = +-1", tag="Q_ref")
    if abs(z) >= Q_ZONE:
        return _Q_series(nu, mu, z, side)
    if abs(1 - z) <= P_ZONE:
        return _Q_from_P(nu, mu, z, side)
    if mpmath.re(z) < 0:
        zp, s, side_p = _half_turn(z, side)
        return -mpmath.expjpi(-s * nu) * Q_ref(nu, mu, zp, side_p)
    raise OracleGapError(f"no oracle route for Q at z = {z}")


@_guarded
def P_oracle(nu, mu, z, side: Side | None = None):
    """``P^{-mu}_nu(z)`` anywhere on the cut plane, by the cheapest available route."""
    nu = to_complex(nu)
    mu = to_complex(mu)
    z = to_complex(z)
    side = _check_side(z, side)
    if abs(1 - z) <= P_ZONE:
        return P_ref(nu, mu, z, side)
    if abs(z) >= Q_ZONE:
        def p(n):
            return (_Q_series(-n - 1, mu, z, side) * mpmath.rgamma(n + mu + 1)
                    - _Q_series(n, mu, z, side) * mpmath.rgamma(mu - n)) / mpmath.cos(n * mpmath.pi)

        if not _near_integer(nu + mpmath.mpf(0.5)):
            return p(nu)
        k = mpmath.mp.dps // 4 + 2
        with mpmath.workdps(mpmath.mp.dps + 2 * k):
            return _richardson(p, nu, k)
    if mpmath.re(z) < 0:
        zp, s, side_p = _half_turn(z, side)
        return mpmath.expjpi(s * nu) * P_ref(nu, mu, zp, side_p) + 2 * Q_ref(nu, mu, zp, side_p) * mpmath.rgamma(mu - nu)
    raise OracleGapError(f"no oracle route for P at z = {z}")


def _real_family(which, nu, mu):
    # Ferrers P is real for real order and real or conical degree; Q only for real degree
    nu = to_complex(nu)
    mu = to_complex(mu)
    if mu.imag != 0:
        return False
    return nu.imag == 0 or (which == "P" and nu.real == mpmath.mpf(-0.5))


@_guarded
def ferrers_ref(which, nu, mu, x):
    """Ferrers ``P^{-mu}_nu(x)`` or ``Q^{-mu}_nu(x)`` on ``(-1, 1)`` from boundary values on the cut."""
    x = to_mp(x)
    if isinstance(x, mpmath.mpc) or not -1 < x < 1:
        raise DomainError(f"ferrers_ref needs -1 < x < 1, got {x}", tag="ferrers_ref")
    nu = to_complex(nu)
    mu = to_complex(mu)
    if which == "P":
        val = mpmath.expjpi(-mu / 2) * P_oracle(nu, mu, x, Side.ABOVE)
    elif which == "Q":
        qa = Q_ref(nu, mu, x, Side.ABOVE)
        qb = Q_ref(nu, mu, x, Side.BELOW)
        val = mpmath.gamma(nu - mu + 1) / 2 * (mpmath.expjpi(mu / 2) * qa + mpmath.expjpi(-mu / 2) * qb)
    else:
        raise DomainError(f"unknown function {which!r}", tag="ferrers_ref")
    if _real_family(which, nu, mu):
        if abs(val.imag) > mpmath.mpf(10) ** (-(mpmath.mp.dps - ORACLE_GUARD - 6)) * max(abs(val), mpmath.mpf(10) ** -mpmath.mp.dps):
            raise InternalConsistencyError(f"Ferrers {which} has imaginary residue {mpmath.nstr(val.imag, 5)}")
        return val.real
    return val


# ---------------------------------------------------------------------------
# identities that hold exactly; used to validate the oracle and, with
# asymptotic values substituted, the expansions


def R_complex(P0, Q0, P1, Q1, nu, mu):
    """``Gamma(nu+mu+2) {(mu-nu-1) P_nu Q_{nu+1} + P_{nu+1} Q_nu}``; identically 1."""
    return mpmath.gamma(nu + mu + 2) * ((mu - nu - 1) * P0 * Q1 + P1 * Q0)


def R_ferrers(P0, Q0, P1, Q1, nu, mu):
    """``Gamma(nu+mu+2)/Gamma(nu-mu+1) {P_{nu+1} Q_nu - P_nu Q_{nu+1}}``; identically 1."""
    return mpmath.gamma(nu + mu + 2) * mpmath.rgamma(nu - mu + 1) * (P1 * Q0 - P0 * Q1)


def S_ferrers(P0x, P0mx, P1x, P1mx, nu, mu):
    """``Gamma(nu+mu+2) Gamma(mu-nu)/2 {P_{nu+1}(x) P_nu(-x) + P_nu(x) P_{nu+1}(-x)}``; identically 1."""
    return mpmath.gamma(nu + mu + 2) * mpmath.gamma(mu - nu) / 2 * (P1x * P0mx + P0x * P1mx)


def _rel(lhs, rhs, scale=None):
    # scale defaults to the larger side; pass the term sizes when both sides vanish
    scale = max(scale or 0, abs(lhs), abs(rhs), mpmath.mpf(10) ** (-mpmath.mp.dps))
    return abs(lhs - rhs) / scale


def identity_suite(nu, mu, zs=(), xs=()) -> dict:
    """Relative residuals of the exact identities at the given points, from oracle values.

    Keys are ``(name, point)``.  Complex points ``zs`` must avoid the cut;
    real points ``xs`` lie in ``(-1, 1)``.
    """
    nu = to_complex(nu)
    mu = to_complex(mu)
    out = {}
    g = mpmath.rgamma(nu - mu + 1)
    for z in zs:
        z = to_complex(z)
        P0, Q0 = P_oracle(nu, mu, z), Q_ref(nu, mu, z)
        P1, Q1 = P_oracle(nu + 1, mu, z), Q_ref(nu + 1, mu, z)
        out[("R", z)] = _rel(R_complex(P0, Q0, P1, Q1, nu, mu), 1)
        Pp = P_oracle(nu, -mu, z)
        Qp1 = mpmath.expjpi(-mu) * Q0 - mpmath.pi * 1j * g * P0
        Qm1 = mpmath.expjpi(mu) * Q0 + mpmath.pi * 1j * g * P0
        out[("cos-Q", z)] = _rel(mpmath.cospi(mu) * Q0, (Qp1 + Qm1) / 2)
        out[("cos-P", z)] = _rel(mpmath.cospi(mu) * P0, mpmath.gamma(nu - mu + 1) / (2j * mpmath.pi) * (
            mpmath.expjpi(-mu) * Qm1 - mpmath.expjpi(mu) * Qp1))
        out[("P-plus", z)] = _rel(2j * mpmath.pi * mpmath.cospi(mu) * mpmath.rgamma(nu + mu + 1) * Pp,
                                  mpmath.expjpi(mu) * Qm1 - mpmath.expjpi(-mu) * Qp1)
        t1, t2 = Pp * mpmath.rgamma(nu + mu + 1), P0 * g
        out[("sin-Q", z)] = _rel(2 * mpmath.sinpi(mu) / mpmath.pi * Q0, t1 - t2, abs(t1) + abs(t2))
        for s in (1, -1):
            zr = z * mpmath.expjpi(s)  # principal value of z e^{s pi i} when arg z + s pi stays in (-pi, pi]
            if abs(mpmath.arg(z) + s * mpmath.pi) < mpmath.pi:
                c = mpmath.cospi(nu)
                ratio = s if c == 0 else mpmath.sinpi((nu + mpmath.mpf(0.5)) * s) / c
                out[(f"P-turn{s:+d}", z)] = _rel(
                    P_oracle(nu, mu, zr),
                    mpmath.expjpi(s * nu) * P0
                    + 2j * ratio * mpmath.expjpi(-mpmath.mpf(s) / 2) * mpmath.rgamma(mu - nu) * Q0)
                out[(f"Q-turn{s:+d}", z)] = _rel(Q_ref(nu, mu, zr), (-1) ** s * mpmath.expjpi(-s * nu) * Q0)
    for x in xs:
        x = to_mp(x)
        P0, Q0 = ferrers_ref("P", nu, mu, x), ferrers_ref("Q", nu, mu, x)
        P1, Q1 = ferrers_ref("P", nu + 1, mu, x), ferrers_ref("Q", nu + 1, mu, x)
        out[("Rbar", x)] = _rel(R_ferrers(P0, Q0, P1, Q1, nu, mu), 1)
        if _is_nonpos_int(mu - nu):
            continue  # S carries Gamma(mu - nu)
        P0m, P1m = ferrers_ref("P", nu, mu, -x), ferrers_ref("P", nu + 1, mu, -x)
        out[("S", x)] = _rel(S_ferrers(P0, P0m, P1, P1m, nu, mu), 1)
    return out
