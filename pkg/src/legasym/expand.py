"""Evaluators for the four large-parameter regimes.

Every complex-argument evaluator has the shape

    prefactor * xi^{1/2} * {C_1(lam xi) A + xi C_2(lam xi) B}

with a Bessel-type pair ``C_1, C_2`` and slowly varying coefficient functions
``A, B``.  ``A, B`` come from a single exp/cosh - exp/sinh composite whose
large parameter may be real (``u`` or ``mu``) or imaginary (``i tau`` or
``i rho``); the imaginary case reproduces the cos/sin forms.  Inside the pole
disk the composites are replaced by Cauchy integrals over a circle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import mpmath

from . import specfun
from .arith import Side, current_precision, to_complex, to_mp
from .cauchy import Contour, cauchy_eval
from .coeffs import build_a, build_F_E, build_large_mu_F_E, calF_values, reexpand_AB_ferrers
from .errors import DomainError, RegimeError, SingularityError, TruncationError
from .maps import (
    ferrers_vars,
    large_mu_vars,
    xi_of_z,
    beta_of_z,
    zsq_minus_one_pow,
)

DEFAULT_N = 11
DEFAULT_N_FERRERS = 5
DEFAULT_N_LG = 10
DEFAULT_POLE_RADIUS = mpmath.mpf("0.5")
DEFAULT_CONTOUR_RADIUS = mpmath.mpf(1)


class Regime(str, enum.Enum):
    LARGE_NU = "large-nu"
    LARGE_NU_IMAG_MU = "large-nu-imag-mu"
    CONICAL_TAU = "conical"
    LARGE_MU = "large-mu"
    LARGE_MU_IMAG = "large-mu-imag"
    FERRERS_LARGE_NU = "ferrers-large-nu"
    FERRERS_CONICAL = "ferrers-conical"
    FERRERS_LARGE_MU_LG = "ferrers-large-mu"


class Method(str, enum.Enum):
    DIRECT = "direct"
    CAUCHY = "cauchy"
    REEXPANDED = "reexpanded"


@dataclass(frozen=True)
class EvalResult:
    value: object
    A: object
    B: object
    method: Method
    N: int
    digits: int
    accuracy: object = None  # magnitude of the last retained exponent term

    def as_dict(self):
        def s(v):
            if v is None:
                return None
            v = to_complex(v)
            return {"re": mpmath.nstr(v.real, self.digits), "im": mpmath.nstr(v.imag, self.digits)}

        return {
            "value": s(self.value),
            "A": s(self.A),
            "B": s(self.B),
            "method": self.method.value,
            "N": self.N,
            "digits": self.digits,
            "accuracy": None if self.accuracy is None else mpmath.nstr(self.accuracy, 6),
        }


@dataclass(frozen=True)
class RegimeRequest:
    """What to evaluate.  Unused parameters stay ``None``."""

    regime: Regime
    which: str = "P_minus"
    nu: object = None
    mu: object = None
    tau: object = None
    rho: object = None
    z: object = None
    x: object = None
    side: Side | None = None
    N: int | None = None
    r: object = DEFAULT_POLE_RADIUS
    contour_radius: object = DEFAULT_CONTOUR_RADIUS
    sign: int = 1
    options: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# constants


def L_const(nu, mu):
    """``sqrt((2nu+1)pi) / (2^{nu+1} Gamma(nu/2+mu/2+1) Gamma(nu/2-mu/2+1))``."""
    nu = to_mp(nu)
    mu = to_mp(mu)
    return mpmath.sqrt((2 * nu + 1) * mpmath.pi) / (
        mpmath.power(2, nu + 1) * specfun.gamma(nu / 2 + mu / 2 + 1) * specfun.gamma(nu / 2 - mu / 2 + 1)
    )


def L_conical(tau, mu):
    """``L`` at ``nu = -1/2 + i tau`` in the form with ``Gamma(mu/2 + 3/4 + i tau/2)``."""
    tau = to_mp(tau)
    mu = to_mp(mu)
    it2 = mpmath.mpc(0, tau / 2)
    return mpmath.expjpi(mpmath.mpf(1) / 4) * mpmath.sqrt(mpmath.pi * tau) / (
        mpmath.power(2, mpmath.mpc(0, tau))
        * specfun.gamma(mu / 2 + mpmath.mpf(3) / 4 + it2)
        * specfun.gamma(mpmath.mpf(3) / 4 - mu / 2 + it2)
    )


# ---------------------------------------------------------------------------
# coefficient functions A, B


def composite_AB(order, large, parg, xi, N: int, guard: bool = True):
    """Truncated ``(A, B, last)`` for Bessel order ``order`` and large parameter ``large``.

    ``parg`` is the argument of the ``E`` polynomials (``beta`` in the
    large-degree regimes, ``z`` in the large-order ones) and ``xi`` the
    matching Liouville variable.  ``last`` is the size of the final retained
    odd term.
    """
    if xi == 0:
        raise SingularityError("composite coefficients need xi != 0 (use the Cauchy path)")
    smax = 2 * N + 1
    tab = build_F_E(order, smax)
    at = build_a(to_mp(order) + 1, smax)
    w = 1 / to_complex(large) if isinstance(large, mpmath.mpc) else 1 / to_mp(large)
    ev = ev_t = od = od_t = 0
    wp = mpmath.mpf(1)
    xs = mpmath.mpf(1)
    last = 0
    for s in range(1, smax + 1):
        wp *= w
        xs *= xi
        e = tab.E[s](parg)
        sgn = 1 if s % 2 else -1
        c = e + sgn * tab.a[s] / (s * xs)
        ct = e + sgn * at[s] / (s * xs)
        if s % 2:
            od += c * wp
            od_t += ct * wp
            if s == smax:
                last = max(abs(c * wp), abs(ct * wp))
        else:
            ev += c * wp
            ev_t += ct * wp
    if guard and last >= 1:
        raise TruncationError(f"last retained term has size {mpmath.nstr(last, 5)}")
    A = mpmath.exp(ev_t) * mpmath.cosh(od_t)
    B = mpmath.exp(ev) * mpmath.sinh(od) / xi
    return A, B, last


def _on_cut(t):
    return mpmath.im(t) == 0 and mpmath.re(t) < 1


def AB_large_nu(mu, u, z, N: int = DEFAULT_N, side: Side | None = None):
    """``(A, B, last)`` of the large-degree regime at ``z`` (``u`` may be ``i tau``)."""
    z = to_complex(z)
    if _on_cut(z) and side is None:
        side = Side.ABOVE
    return composite_AB(mu, u, beta_of_z(z, side), xi_of_z(z, side), N)


def AB_large_mu(u, mu, beta, N: int = DEFAULT_N, side: Side | None = None):
    """``(A, B, last)`` of the large-order regime, as functions of ``beta``."""
    beta = to_complex(beta)
    if _on_cut(beta) and side is None:
        side = Side.ABOVE
    zarg = beta_of_z(beta, side)
    return composite_AB(u, mu, zarg, xi_of_z(beta, side), N)


def _cauchy_AB(node_fn, centre, radius, point, key):
    contour = Contour(centre=centre, radius=radius)

    def f(t):
        A, B, _ = node_fn(t)
        return (A, B)

    A, B = cauchy_eval(f, contour, point, cache_key=key)
    return A, B


def AB_near_pole(mu, u, z, N: int, contour_radius=DEFAULT_CONTOUR_RADIUS):
    """``(A, B)`` inside the pole disk by Cauchy integration around ``t = 1``."""

    def node(t):
        side = Side.ABOVE if _on_cut(t) else None
        return composite_AB(mu, u, beta_of_z(t, side), xi_of_z(t, side), N, guard=False)

    key = ("large_nu", to_complex(mu), to_complex(u), N, to_mp(contour_radius))
    return _cauchy_AB(node, mpmath.mpf(1), to_mp(contour_radius), to_complex(z), key)


def AB_large_mu_near_pole(u, mu, beta, N: int, contour_radius=DEFAULT_CONTOUR_RADIUS):
    def node(b):
        side = Side.ABOVE if _on_cut(b) else None
        return composite_AB(u, mu, beta_of_z(b, side), xi_of_z(b, side), N, guard=False)

    key = ("large_mu", to_complex(u), to_complex(mu), N, to_mp(contour_radius))
    return _cauchy_AB(node, mpmath.mpf(1), to_mp(contour_radius), to_complex(beta), key)


# ---------------------------------------------------------------------------
# large nu, bounded mu


def _digits():
    return current_precision().digits


def _check_standing(nu, mu):
    if mpmath.re(to_complex(mu)) < 0:
        raise RegimeError("the order must have nonnegative real part")
    if mpmath.re(to_complex(nu)) < -0.5:
        raise RegimeError("the degree must have real part at least -1/2")


def _AB_for(mu, large, z, side, N, r, contour_radius):
    if abs(z - 1) < r:
        A, B = AB_near_pole(mu, large, z, N, contour_radius)
        return A, B, None, Method.CAUCHY
    A, B, last = composite_AB(mu, large, beta_of_z(z, side), xi_of_z(z, side), N)
    return A, B, last, Method.DIRECT


def _prep(z, side):
    z = to_complex(z)
    if _on_cut(z):
        if side is None:
            raise DomainError("points on the cut need a side", tag="expand")
    else:
        side = None
    if mpmath.re(z) < 0:
        raise RegimeError("the expansions cover |arg z| <= pi/2 only")
    if z == 1:
        raise SingularityError("z = 1 is the regular singular point")
    return z, side


def legendre_large_nu(which, nu, mu, z, N: int = DEFAULT_N, side: Side | None = None,
                      r=DEFAULT_POLE_RADIUS, contour_radius=DEFAULT_CONTOUR_RADIUS) -> EvalResult:
    """``P^{-mu}_nu``, ``Q^mu_nu`` (boldface), ``P^{mu}_nu`` or ``Q^mu_{nu,+-1}`` for large ``nu``.

    ``which`` is one of ``P_minus``, ``Q``, ``P_plus``, ``Q_branch+``, ``Q_branch-``.
    """
    nu = to_mp(nu)
    mu = to_mp(mu)
    _check_standing(nu, mu)
    z, side = _prep(z, side)
    u = nu + mpmath.mpf(0.5)
    A, B, last, method = _AB_for(mu, u, z, side, N, r, contour_radius)
    xi = xi_of_z(z, side)
    pre = L_const(nu, mu) * zsq_minus_one_pow(z, -mpmath.mpf(1) / 4, side) * mpmath.sqrt(xi)
    x = u * xi
    if which == "P_minus":
        val = pre * specfun.gamma(nu - mu + 1) * (specfun.bessel_I(mu, x) * A + xi * specfun.bessel_I(mu + 1, x) * B)
    elif which == "Q":
        val = pre * (specfun.bessel_K(mu, x) * A - xi * specfun.bessel_K(mu + 1, x) * B)
    elif which == "P_plus":
        val = pre * specfun.gamma(nu + mu + 1) * (specfun.bessel_I(-mu, x) * A + xi * specfun.bessel_I(-mu - 1, x) * B)
    elif which in ("Q_branch+", "Q_branch-"):
        rot = 1 if which.endswith("+") else -1
        val = pre * (specfun.bessel_K_rotated(mu, x, rot) * A + xi * specfun.bessel_K_rotated(mu + 1, x, rot) * B)
    else:
        raise DomainError(f"unknown function {which!r}", tag="legendre_large_nu")
    return EvalResult(val, A, B, method, N, _digits(), last)


def legendre_large_nu_imag_mu(which, rho, nu, z, N: int = DEFAULT_N, side: Side | None = None,
                              r=DEFAULT_POLE_RADIUS, contour_radius=DEFAULT_CONTOUR_RADIUS) -> EvalResult:
    """Imaginary order ``mu = i rho``: ``Q`` (real on ``(1, inf)``), ``P_minus`` = ``P^{-i rho}``,
    ``P_plus`` = ``P^{i rho}`` or ``P_hat`` = their mean.

    ``Q`` uses ``K_{i rho}``, ``K'_{i rho}`` with ``A_hat = (A_{i rho} + A_{-i rho})/2``.
    """
    rho = to_mp(rho)
    nu = to_mp(nu)
    z, side = _prep(z, side)
    u = nu + mpmath.mpf(0.5)
    mu = mpmath.mpc(0, rho)
    A, B, last, method = _AB_for(mu, u, z, side, N, r, contour_radius)
    xi = xi_of_z(z, side)
    root = zsq_minus_one_pow(z, -mpmath.mpf(1) / 4, side) * mpmath.sqrt(xi)
    L = L_const(nu, mu)
    x = u * xi
    if which == "Q":
        Am, _, _, _ = _AB_for(-mu, u, z, side, N, r, contour_radius)
        Ahat = (A + Am) / 2
        if mpmath.im(x) == 0 and mpmath.re(x) > 0:
            k, kp = specfun.bessel_K_imag_order(rho, mpmath.re(x))
        else:
            k = specfun.bessel_K(mu, x)
            kp = -(specfun.bessel_K(mu - 1, x) + specfun.bessel_K(mu + 1, x)) / 2
        val = L * root * (k * Ahat + xi * kp * B)
        return EvalResult(val, Ahat, B, method, N, _digits(), last)
    p_minus = L * specfun.gamma(nu + 1 - mu) * root * (specfun.bessel_I(mu, x) * A + xi * specfun.bessel_I(mu + 1, x) * B)
    p_plus = L * specfun.gamma(nu + 1 + mu) * root * (specfun.bessel_I(-mu, x) * A + xi * specfun.bessel_I(-mu - 1, x) * B)
    val = {"P_minus": p_minus, "P_plus": p_plus, "P_hat": (p_minus + p_plus) / 2}.get(which)
    if val is None:
        raise DomainError(f"unknown function {which!r}", tag="legendre_large_nu_imag_mu")
    return EvalResult(val, A, B, method, N, _digits(), last)


def conical_large_tau(which, tau, mu, z, N: int = DEFAULT_N, side: Side | None = None,
                      r=DEFAULT_POLE_RADIUS, contour_radius=DEFAULT_CONTOUR_RADIUS) -> EvalResult:
    """Conical functions ``nu = -1/2 + i tau`` for large ``tau``.

    ``which``: ``P_minus``, ``Q``, ``P_plus``, ``Q_branch+``, ``Q_branch-``.
    """
    tau = to_mp(tau)
    mu = to_mp(mu)
    if tau <= 0:
        raise RegimeError("tau must be positive")
    z, side = _prep(z, side)
    large = mpmath.mpc(0, tau)
    A, B, last, method = _AB_for(mu, large, z, side, N, r, contour_radius)
    xi = xi_of_z(z, side)
    L = L_conical(tau, mu)
    root = zsq_minus_one_pow(z, -mpmath.mpf(1) / 4, side) * mpmath.sqrt(xi)
    x = tau * xi
    j = mpmath.j
    half = mpmath.mpf(0.5)
    if which == "P_minus":
        val = mpmath.expjpi(mu / 2) * L * specfun.gamma(half - mu + j * tau) * root * (
            specfun.bessel_cylinder(mu, x, "J") * A + j * xi * specfun.bessel_cylinder(mu + 1, x, "J") * B)
    elif which == "P_plus":
        val = mpmath.expjpi(-mu / 2) * L * specfun.gamma(half + mu + j * tau) * root * (
            mpmath.besselj(-mu, x) * A - j * xi * mpmath.besselj(-mu - 1, x) * B)
    elif which == "Q":
        val = -half * mpmath.pi * j * mpmath.expjpi(-mu / 2) * L * root * (
            specfun.bessel_cylinder(mu, x, "H2") * A + j * xi * specfun.bessel_cylinder(mu + 1, x, "H2") * B)
    elif which in ("Q_branch+", "Q_branch-"):
        turns = 1 if which.endswith("+") else 0
        val = half * mpmath.pi * j * mpmath.expjpi(mu / 2) * L * root * (
            specfun.bessel_cylinder(mu, x, "H1", turns) * A
            + j * xi * specfun.bessel_cylinder(mu + 1, x, "H1", turns) * B)
    else:
        raise DomainError(f"unknown function {which!r}", tag="conical_large_tau")
    return EvalResult(val, A, B, method, N, _digits(), last)


def conical_Q_LG(tau, mu, z, N: int = 8, branch: int = 0) -> EvalResult:
    """Elementary LG form of ``Q^mu_{-1/2+i tau}(z)`` (``branch=0``) or of the
    rotated branch ``Q^mu_{-1/2+i tau,-1}(z)`` (``branch=-1``), ``O(tau^-N)`` dropped.

    Valid away from ``z = 1``; used to cross-check the Bessel-type evaluator.
    """
    tau = to_mp(tau)
    mu = to_mp(mu)
    if branch not in (0, -1):
        raise DomainError("branch must be 0 or -1", tag="conical_Q_LG")
    z, side = _prep(z, side=None)
    xi = xi_of_z(z, side)
    beta = beta_of_z(z, side)
    tab = build_F_E(mu, max(N - 1, 1))
    s_ = 1 if branch == 0 else -1
    end = 1 if branch == 0 else -1
    j = mpmath.j
    expo = -s_ * j * tau * xi
    last = mpmath.mpf(0)
    for s in range(1, N):
        term = (s_ * j) ** s * (tab.E[s](beta) - tab.E[s](end)) / tau**s
        expo += term
        last = abs(term)
    lead = mpmath.sqrt(mpmath.pi / 2) / (specfun.gamma(1 + j * tau) * zsq_minus_one_pow(z, mpmath.mpf(1) / 4, side))
    if branch == -1:
        lead *= j
    return EvalResult(lead * mpmath.exp(expo), None, None, Method.DIRECT, N, _digits(), last)


# ---------------------------------------------------------------------------
# large mu, bounded nu


def _AB_mu_for(u, large, z, beta, side, N, r, contour_radius):
    if abs(beta - 1) < r:
        A, B = AB_large_mu_near_pole(u, large, beta, N, contour_radius)
        return A, B, None, Method.CAUCHY
    A, B, last = composite_AB(u, large, z, xi_of_z(beta, _beta_side(beta, side)), N)
    return A, B, last, Method.DIRECT


def _beta_side(beta, side):
    # only beta in [0, 1) sits on a cut; z above it maps below, and vice versa
    if _on_cut(beta):
        return Side.BELOW if side is Side.ABOVE else Side.ABOVE
    return None


def legendre_large_mu(which, nu, mu, z, N: int = DEFAULT_N, side: Side | None = None,
                      r=DEFAULT_POLE_RADIUS, contour_radius=DEFAULT_CONTOUR_RADIUS, u0=10) -> EvalResult:
    """``P^{-mu}_nu`` or ``Q^mu_nu`` for large ``mu`` and bounded ``nu`` (``nu`` may be
    ``-1/2 + i tau``).

    Evaluated in the ``beta`` plane with ``xi_hat = arccosh(beta)``; the ``E``
    polynomials take ``z`` as argument.  For ``|beta - 1| < r`` (large ``|z|``)
    ``A, B`` come from a Cauchy integral in ``beta``.
    """
    nu = to_complex(nu) if isinstance(nu, (complex, mpmath.mpc)) else to_mp(nu)
    mu = to_mp(mu)
    u = nu + mpmath.mpf(0.5)
    if abs(u) > u0:
        raise RegimeError(f"|u| = {mpmath.nstr(abs(u), 5)} exceeds the bounded-degree limit {u0}")
    if mpmath.re(u) < 0:
        raise RegimeError("Re(u) must be nonnegative")
    z, side = _prep(z, side)
    beta = beta_of_z(z, side)
    bside = _beta_side(beta, side)
    A, B, last, method = _AB_mu_for(u, mu, z, beta, side, N, r, contour_radius)
    xh = xi_of_z(beta, bside)
    L = L_const(mu - mpmath.mpf(0.5), u)
    x = mu * xh
    if which == "P_minus":
        val = mpmath.sqrt(2 / mpmath.pi) * L * mpmath.sqrt(xh) * (
            specfun.bessel_K(u, x) * A - xh * specfun.bessel_K(u + 1, x) * B)
    elif which == "Q":
        val = mpmath.sqrt(mpmath.pi / 2) * L * specfun.gamma(mu - nu) * mpmath.sqrt(xh) * (
            specfun.bessel_I(u, x) * A + xh * specfun.bessel_I(u + 1, x) * B)
    elif which == "P_minus_conical":
        # nu = -1/2 + i tau: real combination with K_{i tau}, K'_{i tau} and A_hat
        Am, _, _, _ = _AB_mu_for(-u, mu, z, beta, side, N, r, contour_radius)
        Ahat = (A + Am) / 2
        k = specfun.bessel_K(u, x)
        kp = -(specfun.bessel_K(u - 1, x) + specfun.bessel_K(u + 1, x)) / 2
        val = mpmath.sqrt(2 / mpmath.pi) * L * mpmath.sqrt(xh) * (k * Ahat + xh * kp * B)
        return EvalResult(val, Ahat, B, method, N, _digits(), last)
    else:
        raise DomainError(f"unknown function {which!r}", tag="legendre_large_mu")
    return EvalResult(val, A, B, method, N, _digits(), last)


def legendre_large_mu_imag(which, nu, rho, z, N: int = DEFAULT_N, side: Side | None = None,
                           r=DEFAULT_POLE_RADIUS, contour_radius=DEFAULT_CONTOUR_RADIUS) -> EvalResult:
    """``P^{-i rho}_nu`` (``which='P_minus'``) or ``Q^{i rho}_nu`` (``'Q'``) for large ``rho``."""
    nu = to_complex(nu) if isinstance(nu, (complex, mpmath.mpc)) else to_mp(nu)
    rho = to_mp(rho)
    u = nu + mpmath.mpf(0.5)
    z, side = _prep(z, side)
    beta = beta_of_z(z, side)
    bside = _beta_side(beta, side)
    large = mpmath.mpc(0, rho)
    A, B, last, method = _AB_mu_for(u, large, z, beta, side, N, r, contour_radius)
    xh = xi_of_z(beta, bside)
    L = L_const(mpmath.mpc(-0.5, rho), u)
    x = rho * xh
    j = mpmath.j
    c = mpmath.sqrt(mpmath.pi / 2)
    if which == "P_minus":
        val = -j * mpmath.expjpi(-u / 2) * c * L * mpmath.sqrt(xh) * (
            specfun.bessel_cylinder(u, x, "H2") * A + j * xh * specfun.bessel_cylinder(u + 1, x, "H2") * B)
    elif which == "Q":
        val = mpmath.expjpi(u / 2) * c * L * specfun.gamma(mpmath.mpf(0.5) - u + j * rho) * mpmath.sqrt(xh) * (
            mpmath.besselj(u, x) * A + j * xh * mpmath.besselj(u + 1, x) * B)
    else:
        raise DomainError(f"unknown function {which!r}", tag="legendre_large_mu_imag")
    return EvalResult(val, A, B, method, N, _digits(), last)


# ---------------------------------------------------------------------------
# Ferrers functions


def ferrers_AB(mu, u, x, N: int, method: Method = Method.DIRECT):
    """``(A, B, last)`` for the Ferrers large-degree expansion at ``x`` in ``[0, 1)``.

    ``DIRECT`` uses the exp/cos - exp/sin composites; ``REEXPANDED`` the
    inverse-power form ``1 + sum_{s=1}^{N} A_{2s}/u^{2s}``,
    ``sum_{s=0}^{N-1} B_{2s+1}/u^{2s+1}`` (``N`` terms in each), whose
    coefficients are bounded up to ``x = 1``.
    """
    mu = to_mp(mu)
    u = to_mp(u)
    x = to_mp(x)
    if method is Method.REEXPANDED:
        Ac, Bc = reexpand_AB_ferrers(mu, N)
        if x == 1:
            g = eta = mpmath.mpf(0)
            Av = [c.at_one() for c in Ac[1:]]
            Bv = [c.at_one() for c in Bc]
        else:
            fv = ferrers_vars(x)
            g, eta = fv.gamma, fv.eta
            Av = [c(g, eta) for c in Ac[1:]]
            Bv = [c(g, eta) for c in Bc]
        A = 1 + mpmath.fsum(Av[s - 1] / u ** (2 * s) for s in range(1, N + 1))
        B = mpmath.fsum(Bv[s] / u ** (2 * s + 1) for s in range(N))
        return A, B, abs(Bv[N - 1] / u ** (2 * N - 1))
    fv = ferrers_vars(x)
    smax = 2 * N + 1
    tab = build_F_E(mu, smax)
    ft = calF_values(tab, build_a(mu + 1, smax), fv.gamma, fv.eta, smax)
    fp = calF_values(tab, tab.a, fv.gamma, fv.eta, smax)
    ev_t = mpmath.fsum(ft[2 * s] / u ** (2 * s) for s in range(1, N + 1))
    od_t = mpmath.fsum(ft[2 * s + 1] / u ** (2 * s + 1) for s in range(N + 1))
    ev = mpmath.fsum(fp[2 * s] / u ** (2 * s) for s in range(1, N + 1))
    od = mpmath.fsum(fp[2 * s + 1] / u ** (2 * s + 1) for s in range(N + 1))
    last = max(abs(ft[smax]), abs(fp[smax])) / u**smax
    if last >= 1:
        raise TruncationError(f"last retained term has size {mpmath.nstr(last, 5)}")
    A = mpmath.exp(ev_t) * mpmath.cos(od_t)
    B = mpmath.exp(ev) * mpmath.sin(od) / fv.eta
    return A, B, last


def _ferrers_pq_nonneg(which, nu, mu, x, N, method):
    u = nu + mpmath.mpf(0.5)
    A, B, last = ferrers_AB(mu, u, x, N, method)
    fv = ferrers_vars(x)
    eta = fv.eta
    pre = L_const(nu, mu) * specfun.gamma(nu - mu + 1) * (1 - x * x) ** (-mpmath.mpf(1) / 4) * mpmath.sqrt(eta)
    t = u * eta
    if which == "P":
        val = pre * (mpmath.besselj(mu, t) * A - eta * mpmath.besselj(mu + 1, t) * B)
    elif which == "Q":
        val = -mpmath.pi / 2 * pre * (mpmath.bessely(mu, t) * A - eta * mpmath.bessely(mu + 1, t) * B)
    else:
        raise DomainError(f"unknown function {which!r}", tag="ferrers_large_nu")
    return val, A, B, last


def ferrers_large_nu(which, nu, mu, x, N: int = DEFAULT_N_FERRERS, r=DEFAULT_POLE_RADIUS,
                     method: str | Method = "auto") -> EvalResult:
    """Ferrers ``P^{-mu}_nu(x)`` or ``Q^{-mu}_nu(x)`` for large ``nu`` and ``-1 < x < 1``.

    ``method='auto'`` uses the composites for ``x <= 1 - r`` and the
    re-expanded coefficients beyond.  Negative ``x`` goes through the
    reflection formulas
    ``P(-x) = cos((nu-mu)pi) P(x) - (2/pi) sin((nu-mu)pi) Q(x)`` and
    ``Q(-x) = -cos((nu-mu)pi) Q(x) - (pi/2) sin((nu-mu)pi) P(x)``.
    """
    nu = to_mp(nu)
    mu = to_mp(mu)
    x = to_mp(x)
    if not -1 < x < 1:
        if x == 1 and which == "P":
            return EvalResult(mpmath.mpf(1 if mu == 0 else 0), None, None, Method.REEXPANDED, N, _digits(), None)
        raise DomainError(f"ferrers_large_nu needs -1 < x < 1, got {x}", tag="ferrers_large_nu")
    ax = abs(x)
    if method == "auto":
        m = Method.REEXPANDED if ax > 1 - r else Method.DIRECT
    else:
        m = Method(method)
    if x >= 0:
        val, A, B, last = _ferrers_pq_nonneg(which, nu, mu, x, N, m)
        return EvalResult(val, A, B, m, N, _digits(), last)
    p, A, B, last = _ferrers_pq_nonneg("P", nu, mu, ax, N, m)
    q, _, _, _ = _ferrers_pq_nonneg("Q", nu, mu, ax, N, m)
    c = mpmath.cospi(nu - mu)
    s = mpmath.sinpi(nu - mu)
    if which == "P":
        val = c * p - 2 / mpmath.pi * s * q
    elif which == "Q":
        val = -c * q - mpmath.pi / 2 * s * p
    else:
        raise DomainError(f"unknown function {which!r}", tag="ferrers_large_nu")
    return EvalResult(val, A, B, m, N, _digits(), last)


def ferrers_conical(tau, mu, x, N: int = 8) -> EvalResult:
    """Conical Ferrers ``P^{-mu}_{-1/2 + i tau}(x)`` for large ``tau``, ``0 <= x < 1``.

    The returned value carries the relatively exponentially small imaginary
    part of the normalising constant.
    """
    tau = to_mp(tau)
    mu = to_mp(mu)
    x = to_mp(x)
    fv = ferrers_vars(x)
    eta = fv.eta
    smax = 2 * N + 1
    tab = build_F_E(mu, smax)
    ft = calF_values(tab, build_a(mu + 1, smax), fv.gamma, eta, smax)
    fp = calF_values(tab, tab.a, fv.gamma, eta, smax)

    def sums(f):
        ev = mpmath.fsum((-1) ** s * f[2 * s] / tau ** (2 * s) for s in range(1, N + 1))
        od = mpmath.fsum((-1) ** s * f[2 * s + 1] / tau ** (2 * s + 1) for s in range(N + 1))
        return ev, od

    ev_t, od_t = sums(ft)
    ev, od = sums(fp)
    last = max(abs(ft[smax]), abs(fp[smax])) / tau**smax
    if last >= 1:
        raise TruncationError(f"last retained term has size {mpmath.nstr(last, 5)}")
    A = mpmath.exp(ev_t) * mpmath.cosh(od_t)
    # B = -(i/eta) exp(ev) sinh(od); the combination -i eta I_{mu+1} B is real
    Bre = mpmath.exp(ev) * mpmath.sinh(od) / eta
    B = -mpmath.j * Bre
    j = mpmath.j
    pre = mpmath.expjpi(mu / 2) * L_conical(tau, mu) * specfun.gamma(j * tau - mu + mpmath.mpf(0.5)) * (
        1 - x * x) ** (-mpmath.mpf(1) / 4) * mpmath.sqrt(eta)
    t = tau * eta
    val = pre * (mpmath.besseli(mu, t) * A - eta * mpmath.besseli(mu + 1, t) * Bre)
    return EvalResult(val, A, B, Method.DIRECT, N, _digits(), last)


def ferrers_large_mu_LG(sign: int, mu, x, N: int = DEFAULT_N_LG, nu=None, tau=None) -> EvalResult:
    """Ferrers ``P^{-mu}_nu(sign * x)`` for large ``mu`` from the elementary LG form.

    Real degree ``nu`` with ``alpha = (nu + 1/2)/mu < 1``, or conical degree
    ``-1/2 + i tau``.  The ``O(x mu^{-N})`` error factor is set to one.
    """
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1", tag="ferrers_large_mu_LG")
    mu = to_mp(mu)
    x = to_mp(x)
    if (nu is None) == (tau is None):
        raise RegimeError("give exactly one of nu, tau")
    if nu is not None:
        nu = to_mp(nu)
        v = large_mu_vars(x, alpha=(nu + mpmath.mpf(0.5)) / mu)
        den = specfun.gamma(nu / 2 + mu / 2 + 1) * specfun.gamma(mu / 2 + mpmath.mpf(0.5) - nu / 2)
    else:
        tau = to_mp(tau)
        v = large_mu_vars(x, alpha_tilde=tau / mu)
        den = abs(specfun.gamma(mpmath.mpc(mu / 2 + mpmath.mpf(3) / 4, tau / 2))) ** 2
    a2 = v.alpha_sq
    tab = build_large_mu_F_E(a2, max(N - 1, 1))
    # sqrt(p/x) without the 0/0 at x = 0
    root = (1 - a2 * (1 - x * x)) ** (-mpmath.mpf(1) / 4)
    expo = -sign * mu * v.chi
    last = mpmath.mpf(0)
    for s in range(1, N):
        term = (-sign) ** s * tab.E[s](v.p) / mu**s
        expo += term
        last = abs(term)
    val = mpmath.sqrt(mpmath.pi) * (1 - a2) ** (mpmath.mpf(1) / 4) * root / (mpmath.power(2, mu) * den) * mpmath.exp(expo)
    return EvalResult(val, None, None, Method.DIRECT, N, _digits(), last)


# ---------------------------------------------------------------------------


def evaluate(req: RegimeRequest) -> EvalResult:
    """Dispatch a :class:`RegimeRequest` to its evaluator."""
    reg = Regime(req.regime)
    opts = dict(r=req.r, contour_radius=req.contour_radius)
    if reg is Regime.LARGE_NU:
        return legendre_large_nu(req.which, req.nu, req.mu, req.z, req.N or DEFAULT_N, req.side, **opts)
    if reg is Regime.LARGE_NU_IMAG_MU:
        return legendre_large_nu_imag_mu(req.which, req.rho, req.nu, req.z, req.N or DEFAULT_N, req.side, **opts)
    if reg is Regime.CONICAL_TAU:
        return conical_large_tau(req.which, req.tau, req.mu, req.z, req.N or DEFAULT_N, req.side, **opts)
    if reg is Regime.LARGE_MU:
        nu = req.nu
        if req.tau is not None:
            nu = mpmath.mpc(-0.5, to_mp(req.tau))
        return legendre_large_mu(req.which, nu, req.mu, req.z, req.N or DEFAULT_N, req.side, **opts)
    if reg is Regime.LARGE_MU_IMAG:
        nu = req.nu if req.tau is None else mpmath.mpc(-0.5, to_mp(req.tau))
        return legendre_large_mu_imag(req.which, nu, req.rho, req.z, req.N or DEFAULT_N, req.side, **opts)
    if reg is Regime.FERRERS_LARGE_NU:
        return ferrers_large_nu(req.which, req.nu, req.mu, req.x, req.N or DEFAULT_N_FERRERS, req.r,
                                req.options.get("method", "auto"))
    if reg is Regime.FERRERS_CONICAL:
        return ferrers_conical(req.tau, req.mu, req.x, req.N or 8)
    if reg is Regime.FERRERS_LARGE_MU_LG:
        return ferrers_large_mu_LG(req.sign, req.mu, req.x, req.N or DEFAULT_N_LG, nu=req.nu, tau=req.tau)
    raise RegimeError(f"unknown regime {req.regime}")
