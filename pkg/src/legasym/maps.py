"""Liouville-type variable changes and their branch conventions.

Complex variables live in the half-plane ``|arg z| <= pi/2`` cut along
``(-inf, 1]``.  Points on the cut must carry a :class:`~legasym.arith.Side`.
``(z**2 - 1)**a`` is always formed as ``(z - 1)**a * (z + 1)**a`` so that it is
continuous off the cut.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .arith import Side, clog, cpow, csqrt, require_side, to_complex, to_mp
from .errors import DomainError, RegimeError, SingularityError

NEAR_POLE_RADIUS = mpmath.mpf("0.1")


def zsq_minus_one_pow(z, a, side: Side | None = None):
    """``(z**2 - 1)**a`` on the branch continuous off ``(-inf, 1]``."""
    z = to_complex(z)
    return cpow(z - 1, a, side) * cpow(z + 1, a, side)


def _near_pole_xi(h, side):
    # arccosh(1+h) = 2 asinh(sqrt(h/2)) = sqrt(2h) * sum_k b_k (h/2)^k / (2k+1),
    # b_k = (-1)^k (2k)! / (4^k k!^2)
    y2 = h / 2
    tol = mpmath.mpf(10) ** (-mpmath.mp.dps - 3)
    b = mpmath.mpf(1)
    acc = mpmath.mpf(1)
    for k in range(1, 10000):
        b *= -y2 * (2 * k - 1) / (2 * k)
        term = b / (2 * k + 1)
        acc += term
        if abs(term) < tol:
            break
    return mpmath.sqrt(2) * csqrt(h, side) * acc


def xi_of_z(z, side: Side | None = None):
    """Liouville variable ``arccosh z``.

    For ``|z - 1| < 0.1`` the value comes from a power series in ``z - 1``
    (no cancellation at the pole).  ``xi(1) == 0``.
    """
    z = to_complex(z)
    h = z - 1
    if h == 0:
        return mpmath.mpc(0)
    require_side(z, side, 1, "xi_of_z")
    if abs(h) < NEAR_POLE_RADIUS:
        return _near_pole_xi(h, side)
    return clog(z + cpow(z - 1, 0.5, side) * cpow(z + 1, 0.5, side))


def beta_of_z(z, side: Side | None = None):
    """``beta = z (z**2 - 1)**(-1/2)``; an involution on the cut half-plane."""
    z = to_complex(z)
    if z == 1 or z == -1:
        raise SingularityError("beta is singular at z = +-1")
    require_side(z, side, 1, "beta_of_z")
    return z * zsq_minus_one_pow(z, -0.5, side)


def z_of_beta(beta, side: Side | None = None):
    """Inverse of :func:`beta_of_z` (the same formula)."""
    return beta_of_z(beta, side)


def xi_from_beta(beta, side: Side | None = None):
    """``xi = arccoth(beta) = (log(beta + 1) - log(beta - 1)) / 2``."""
    beta = to_complex(beta)
    if beta == 1 or beta == -1:
        raise SingularityError("xi is infinite at beta = +-1")
    require_side(beta, side, 1, "xi_from_beta")
    return (clog(beta + 1, side) - clog(beta - 1, side)) / 2


def xi_hat(beta, side: Side | None = None):
    """``arccosh(beta) = arccoth(z)``: the Liouville variable of the large-mu regime."""
    return xi_of_z(beta, side)


@dataclass(frozen=True)
class LiouvilleVars:
    z: mpmath.mpc
    xi: mpmath.mpc
    beta: mpmath.mpc
    side: Side | None = None

    @classmethod
    def at(cls, z, side: Side | None = None) -> "LiouvilleVars":
        z = to_complex(z)
        if z.imag != 0 or z.real > 1:
            side = None
        return cls(z=z, xi=xi_of_z(z, side), beta=beta_of_z(z, side), side=side)

    def zsq_pow(self, a):
        return zsq_minus_one_pow(self.z, a, self.side)


@dataclass(frozen=True)
class FerrersVars:
    x: mpmath.mpf
    eta: mpmath.mpf
    gamma: mpmath.mpf


def ferrers_vars(x) -> FerrersVars:
    """``eta = arccos x`` in ``(0, pi/2]`` and ``gamma = x (1 - x**2)**(-1/2) = cot eta``."""
    x = to_mp(x)
    if isinstance(x, mpmath.mpc) or not (0 <= x < 1):
        raise DomainError(f"ferrers_vars needs 0 <= x < 1, got {x}", tag="ferrers_vars")
    return FerrersVars(x=x, eta=mpmath.acos(x), gamma=x / mpmath.sqrt((1 - x) * (1 + x)))


@dataclass(frozen=True)
class LargeMuVars:
    """Variables of the large-order Ferrers LG expansion.

    ``alpha_sq`` is ``alpha**2`` in the real-degree case and ``-alpha_tilde**2``
    in the conical case; ``p``/``chi`` then stand for ``p~``/``chi~``.
    """

    x: mpmath.mpf
    alpha_sq: mpmath.mpf
    p: mpmath.mpf
    chi: mpmath.mpf

    @property
    def conical(self) -> bool:
        return self.alpha_sq < 0


def _alpha_sq(alpha=None, alpha_tilde=None):
    if (alpha is None) == (alpha_tilde is None):
        raise RegimeError("give exactly one of alpha, alpha_tilde")
    if alpha is not None:
        alpha = to_mp(alpha)
        if alpha < 0 or alpha >= 1:
            raise RegimeError(f"large-mu LG expansion needs 0 <= alpha < 1, got {alpha}")
        return alpha * alpha
    alpha_tilde = to_mp(alpha_tilde)
    if alpha_tilde <= 0:
        raise RegimeError(f"alpha_tilde must be positive, got {alpha_tilde}")
    return -alpha_tilde * alpha_tilde


def p_of_x(x, alpha_sq):
    return x / mpmath.sqrt(1 - alpha_sq * (1 - x * x))


def chi_of_p(p, alpha_sq):
    """Liouville variable ``chi`` as a function of ``p``.

    Real degree: ``atanh p - alpha atanh(alpha p)``.  Conical:
    ``atanh p + alpha~ atan(alpha~ p)``, which equals the half-angle form
    ``(alpha~/2) atan(2 alpha~ p / (1 - alpha~**2 p**2))`` while
    ``alpha~ p < 1`` and stays continuous beyond it.
    """
    if alpha_sq >= 0:
        a = mpmath.sqrt(alpha_sq)
        return mpmath.atanh(p) - a * mpmath.atanh(a * p)
    at = mpmath.sqrt(-alpha_sq)
    return mpmath.atanh(p) + at * mpmath.atan(at * p)


def large_mu_vars(x, alpha=None, alpha_tilde=None) -> LargeMuVars:
    a2 = _alpha_sq(alpha, alpha_tilde)
    x = to_mp(x)
    if not (-1 < x < 1):
        raise DomainError(f"large_mu_vars needs -1 < x < 1, got {x}", tag="large_mu_vars")
    p = p_of_x(x, a2)
    return LargeMuVars(x=x, alpha_sq=a2, p=p, chi=chi_of_p(p, a2))


def dchi_dp(p, alpha_sq):
    return (1 - alpha_sq) / ((1 - p * p) * (1 - alpha_sq * p * p))


def schwarzian_psi(x, alpha=None, alpha_tilde=None):
    """Closed-form Schwarzian ``psi(alpha, x)`` of the large-order Ferrers equation."""
    a2 = _alpha_sq(alpha, alpha_tilde)
    x = to_mp(x)
    w = 1 - x * x
    return w * (1 - 4 * a2 * x * x - a2 * a2 * w) / (4 * (1 - a2 * w) ** 3)


def schwarzian_F1_F2(x, alpha=None, alpha_tilde=None):
    """``(psi/2, -(dpsi/dchi)/4)`` with the chi-derivative taken numerically."""
    a2 = _alpha_sq(alpha, alpha_tilde)
    kw = {"alpha": alpha} if alpha is not None else {"alpha_tilde": alpha_tilde}
    x = to_mp(x)
    psi = schwarzian_psi(x, **kw)
    dpsi_dx = mpmath.diff(lambda t: schwarzian_psi(t, **kw), x)
    dchi_dx = mpmath.sqrt(1 - a2 * (1 - x * x)) / (1 - x * x)
    return psi / 2, -dpsi_dx / dchi_dx / 4
