"""Gamma and Bessel kernels.

Gamma and the ordinary evaluators of I, K, J, Y, H come from mpmath (they
are convergent/asymptotic series with their own error control).  The
continuations onto rotated sheets and the exponential large-argument form of
K are implemented here, as they are what the expansions consume.
"""

from __future__ import annotations

import enum

import mpmath

from .arith import to_complex, to_mp
from .coeffs import build_a
from .errors import DomainError, PoleError, SingularityError, TruncationError


class Kind(str, enum.Enum):
    I = "I"
    K = "K"
    J = "J"
    Y = "Y"
    H1 = "H1"
    H2 = "H2"


def gamma(z):
    """Gamma function on the complex plane."""
    z = to_mp(z)
    if mpmath.im(z) == 0 and mpmath.re(z) <= 0 and mpmath.re(z) == int(mpmath.re(z)):
        n = int(mpmath.re(z))
        raise PoleError(f"gamma has a pole at {n}", location=n, tag="gamma")
    return mpmath.gamma(z)


def rgamma(z):
    """``1/Gamma(z)`` (entire; zero at the poles of gamma)."""
    return mpmath.rgamma(to_mp(z))


def _check_order(mu):
    if mpmath.im(mu) == 0 and mpmath.re(mu) < 0:
        raise DomainError(f"Bessel order must be nonnegative, got {mu}", tag="bessel")


def bessel_modified(mu, z, which="I"):
    """Principal-branch ``I_mu(z)`` or ``K_mu(z)`` for ``mu >= 0``."""
    mu = to_mp(mu)
    z = to_complex(z)
    _check_order(mu)
    which = Kind(which)
    if which is Kind.I:
        return mpmath.besseli(mu, z)
    if which is Kind.K:
        if z == 0:
            raise SingularityError("K_mu(0) is infinite")
        return mpmath.besselk(mu, z)
    raise DomainError(f"bessel_modified takes I or K, not {which}", tag="bessel")


def bessel_I(mu, z):
    """``I_mu(z)`` for any order (negative orders appear in the ``P^{+mu}`` forms)."""
    return mpmath.besseli(to_mp(mu), to_complex(z))


def bessel_K(mu, z):
    z = to_complex(z)
    if z == 0:
        raise SingularityError("K_mu(0) is infinite")
    return mpmath.besselk(to_mp(mu), z)


def bessel_K_rotated(mu, z, rotation: int):
    """``K_mu(z e^{rotation * pi i})`` for ``rotation = +1`` or ``-1``.

    Continued off the principal sheet by
    ``K(z e^{+-pi i}) = e^{-+mu pi i} K(z) -+ pi i I(z)``.
    """
    mu = to_mp(mu)
    z = to_complex(z)
    if z == 0:
        raise SingularityError("K_mu(0) is infinite")
    if rotation not in (1, -1):
        raise DomainError("rotation must be +1 or -1 (half-turns)", tag="bessel_K_rotated")
    return mpmath.expjpi(-rotation * mu) * mpmath.besselk(mu, z) - rotation * mpmath.j * mpmath.pi * mpmath.besseli(mu, z)


def _hankel(kind: int, mu, z):
    # through K: no cancellation where the Hankel function is recessive
    #   H1_mu(z) = -(2i/pi) e^{-mu pi i/2} K_mu(-iz),  -pi/2 < arg z <= pi
    #   H2_mu(z) = (2i/pi) e^{mu pi i/2} K_mu(iz),     -pi < arg z <= pi/2
    a = mpmath.arg(z)
    half = mpmath.pi / 2
    if kind == 1 and -half < a:
        return -2j / mpmath.pi * mpmath.expjpi(-mu / 2) * mpmath.besselk(mu, -1j * z)
    if kind == 2 and a <= half:
        return 2j / mpmath.pi * mpmath.expjpi(mu / 2) * mpmath.besselk(mu, 1j * z)
    return mpmath.hankel1(mu, z) if kind == 1 else mpmath.hankel2(mu, z)


def bessel_cylinder(mu, z, which="J", turns: int = 0):
    """``J, Y, H1, H2`` of order ``mu`` at ``z``.

    ``turns=1`` with ``which='H1'`` gives ``H1_mu(z e^{2 pi i})`` via
    ``H1(z e^{2pi i}) = -H1(z) - 2 cos(mu pi) e^{-mu pi i} H2(z)``.
    """
    mu = to_mp(mu)
    z = to_complex(z)
    which = Kind(which)
    if z == 0 and which in (Kind.Y, Kind.H1, Kind.H2):
        raise SingularityError(f"{which.value}_mu(0) is infinite")
    if which is Kind.J:
        return mpmath.besselj(mu, z)
    if which is Kind.Y:
        return mpmath.bessely(mu, z)
    if which is Kind.H2:
        return _hankel(2, mu, z)
    if which is Kind.H1:
        h1 = _hankel(1, mu, z)
        if turns == 0:
            return h1
        if turns == 1:
            return -h1 - 2 * mpmath.cospi(mu) * mpmath.expjpi(-mu) * _hankel(2, mu, z)
        raise DomainError("only one full turn is supported for H1", tag="bessel_cylinder")
    raise DomainError(f"bessel_cylinder does not evaluate {which}", tag="bessel")


def bessel_K_exponential_expansion(mu, z, N: int, a=None):
    """``sqrt(pi/(2z)) exp{-z - sum_{s<=N} (-1)^s a_{mu,s} / (s z^s)}``.

    Refuses (``TruncationError``) when the last retained exponent term is not
    below 1, since the series is then useless.
    """
    z = to_complex(z)
    if z == 0:
        raise SingularityError("K_mu(0) is infinite")
    if a is None:
        a = build_a(to_mp(mu), max(N, 1))
    expo = -z
    last = mpmath.mpf(0)
    for s in range(1, N + 1):
        last = (-1) ** s * a[s] / (s * z**s)
        expo -= last
    if N and abs(last) >= 1:
        raise TruncationError(f"K expansion at |z|={mpmath.nstr(abs(z), 5)} diverges at N={N}")
    return mpmath.sqrt(mpmath.pi / (2 * z)) * mpmath.exp(expo)


def bessel_K_imag_order(rho, x):
    """Real pair ``(K_{i rho}(x), K'_{i rho}(x))`` for ``x > 0``."""
    rho = to_mp(rho)
    x = to_mp(x)
    if isinstance(x, mpmath.mpc) or x <= 0:
        raise DomainError("imaginary-order K needs a positive real argument", tag="K_imag")
    nu = mpmath.mpc(0, rho)
    k = mpmath.besselk(nu, x)
    kp = -(mpmath.besselk(nu - 1, x) + mpmath.besselk(nu + 1, x)) / 2
    return mpmath.re(k), mpmath.re(kp)
