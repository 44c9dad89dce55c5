"""Recursive coefficient machinery.

Polynomials ``F_{mu,s}``, ``E_{mu,s}`` in ``beta``, the scalars ``a_{mu,s}``,
the composite coefficients built from them, the large-order Ferrers
polynomials in ``p``, and the re-expansion of the Ferrers coefficient
functions in inverse powers of ``u`` (bivariate in ``gamma`` and ``1/eta``).

Tables are built numerically at working precision for a fixed parameter and
cached per ``(parameter, S, precision)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import mpmath

from .arith import to_mp
from .errors import DomainError, InternalConsistencyError, PoleError
from .poly import BiPoly, Poly

BETA_SQ_MINUS_ONE = Poly([-1, 0, 1])


@dataclass(frozen=True)
class CoeffTable:
    """``F[s]``, ``E[s]`` (polynomials) and ``a[s]`` for ``s = 1..S``.

    Index 0 of each list is a zero placeholder so that ``E[s]`` reads as in
    the formulas.
    """

    param: object
    S: int
    F: tuple
    E: tuple
    a: tuple
    variable: str = "beta"

    def E_at(self, s: int, x):
        return self.E[s](x)


def _key(x):
    return (x, mpmath.mp.prec)


def _is_degenerate(mu) -> bool:
    return 4 * mu * mu - 1 == 0


def build_a(mu, S: int) -> tuple:
    """``a_{mu,s}``, ``s = 0..S`` (``a[0] = 0``)."""
    if S < 1:
        raise DomainError("S must be at least 1", tag="build_a")
    return _build_a(*_key(to_mp(mu)), S)


@functools.lru_cache(maxsize=256)
def _build_a(mu, _prec, S):
    c = (4 * mu * mu - 1) / 8
    a = [mpmath.mpf(0), c, c]
    for s in range(2, S):
        a.append(mpmath.mpf(s + 1) / 2 * a[s] - mpmath.fsum(a[j] * a[s - j] for j in range(1, s)) / 2)
    return tuple(a[: S + 1])


def build_F_E(mu, S: int) -> CoeffTable:
    """Polynomials ``F_{mu,s}(beta)``, ``E_{mu,s}(beta)`` and ``a_{mu,s}``.

    ``E_s = -int_0^beta F_s / (b**2 - 1) db`` via exact division (the remainder
    is asserted to vanish) and termwise integration.
    """
    if S < 1:
        raise DomainError("S must be at least 1", tag="build_F_E")
    return _build_F_E(*_key(to_mp(mu)), S)


@functools.lru_cache(maxsize=256)
def _build_F_E(mu, _prec, S):
    a = _build_a(mu, _prec, S)
    if _is_degenerate(mu):
        zeros = (Poly.zero(),) * (S + 1)
        return CoeffTable(mu, S, zeros, zeros, a)
    c = (4 * mu * mu - 1) / 8
    F = [Poly.zero(), Poly([-c, 0, c]), Poly([0, -c, 0, c])]
    for s in range(2, S):
        t = BETA_SQ_MINUS_ONE * F[s].deriv() * mpmath.mpf(0.5)
        for j in range(1, s):
            t = t - F[j] * F[s - j] * mpmath.mpf(0.5)
        F.append(t)
    F = F[: S + 1]
    E = [Poly.zero()]
    for s in range(1, S + 1):
        q = F[s].exact_div(BETA_SQ_MINUS_ONE, f"F_{s}")
        E.append(-q.antideriv())
    return CoeffTable(mu, S, tuple(F), tuple(E), a)


def composite_values(table: CoeffTable, a_vals, beta, xi, smax: int):
    """``E_s(beta) + (-1)^{s+1} a_s / (s xi^s)`` for ``s = 1..smax`` (index 0 unused).

    ``a_vals`` is ``table.a`` for the plain family and the ``mu+1`` list for the
    tilde family.
    """
    if xi == 0:
        raise PoleError("composite coefficients are singular at xi = 0", location=1)
    out = [mpmath.mpf(0)]
    xis = mpmath.mpf(1)
    for s in range(1, smax + 1):
        xis *= xi
        out.append(table.E[s](beta) + (-1) ** (s + 1) * a_vals[s] / (s * xis))
    return out


def calE(kind: str, mu, s: int, z, side=None):
    """Composite coefficient ``calE_{mu,s}(z)`` (``kind='plain'``) or its tilde variant."""
    from .maps import LiouvilleVars

    mu = to_mp(mu)
    v = LiouvilleVars.at(z, side)
    if v.xi == 0:
        raise PoleError("calE is singular at z = 1", location=1)
    tab = build_F_E(mu, s)
    a = tab.a if kind == "plain" else build_a(mu + 1, s)
    return composite_values(tab, a, v.beta, v.xi, s)[s]


def calF_values(table: CoeffTable, a_vals, gamma, eta, smax: int):
    """Real Ferrers composites: ``F_s`` for even ``s`` and ``i F_s`` for odd ``s``.

    ``F_s = E_s(i gamma) - (-i)^s a_s / (s eta^s)``.
    """
    if eta == 0:
        raise PoleError("Ferrers composites are singular at x = 1", location=1)
    out = [mpmath.mpf(0)]
    ig = mpmath.mpc(0, gamma)
    for s in range(1, smax + 1):
        val = table.E[s](ig) - (-1j) ** s * a_vals[s] / (s * eta**s)
        if s % 2:
            val = 1j * val
        out.append(mpmath.re(val))
    return out


def calF(kind: str, mu, s: int, x):
    """Ferrers composite (real form) at ``x`` in ``[0, 1)``."""
    from .maps import ferrers_vars

    mu = to_mp(mu)
    fv = ferrers_vars(x)
    tab = build_F_E(mu, s)
    a = tab.a if kind == "plain" else build_a(mu + 1, s)
    return calF_values(tab, a, fv.gamma, fv.eta, s)[s]


# ---------------------------------------------------------------------------
# large-order Ferrers (LG) polynomials in p


def build_large_mu_F_E(alpha_sq, S: int) -> CoeffTable:
    """``F_s(alpha, p)`` and ``E_s(alpha, p)`` for ``s = 1..S``.

    ``alpha_sq`` is ``alpha**2`` (or ``-alpha_tilde**2`` in the conical case).
    """
    alpha_sq = to_mp(alpha_sq)
    if alpha_sq == 1:
        raise DomainError("alpha**2 = 1 is excluded", tag="build_large_mu_F_E")
    if S < 1:
        raise DomainError("S must be at least 1", tag="build_large_mu_F_E")
    return _build_large_mu(*_key(alpha_sq), S)


@functools.lru_cache(maxsize=64)
def _build_large_mu(a2, _prec, S):
    # the recurrence loses digits as s grows; build with guard bits, then round
    with mpmath.workprec(_prec + 30 + 8 * S):
        F, E = _large_mu_polys(+a2, S)
    F = tuple(f.map(lambda c: +c) for f in F)
    E = tuple(e.map(lambda c: +c) for e in E)
    return CoeffTable(a2, S, F, E, (mpmath.mpf(0),) * (S + 1), variable="p")


def _large_mu_polys(a2, S):
    om = 1 - a2
    one_p2 = Poly([1, 0, -1])
    one_a2p2 = Poly([1, 0, -a2])
    D = one_p2 * one_a2p2
    F = [Poly.zero()]
    F.append(D * Poly([1 + a2, 0, -5 * a2]) * (1 / (8 * om**2)))
    F.append(D * Poly([0, 1]) * Poly([1 + 7 * a2 + a2**2, 0, -12 * a2 - 12 * a2**2, 0, 15 * a2**2]) * (1 / (8 * om**3)))
    factor = one_p2 * Poly([-1, 0, a2]) * (1 / (2 * om))
    for s in range(2, S):
        t = factor * F[s].deriv()
        for j in range(1, s):
            t = t - F[j] * F[s - j] * mpmath.mpf(0.5)
        F.append(t)
    F = F[: S + 1]
    E = [Poly.zero()]
    for s in range(1, S + 1):
        E.append(F[s].exact_div(D, f"large-order F_{s}").antideriv() * om)
    return F, E


# ---------------------------------------------------------------------------
# re-expansion of the Ferrers coefficient functions in inverse powers of u

REEXPAND_MAX_S = 8
LAURENT_SWITCH_ETA = mpmath.mpf("0.2")


def _series_exp(X, n):
    # exp of a power series with X[0] = 0
    e = [BiPoly.const(1)] + [BiPoly()] * n
    for m in range(1, n + 1):
        acc = BiPoly()
        for k in range(1, m + 1):
            if not X[k].is_zero():
                acc = acc + X[k] * e[m - k] * k
        e[m] = acc * (mpmath.mpf(1) / m)
    return e


def _series_cos_sin(Y, n):
    C = [BiPoly.const(1)] + [BiPoly()] * n
    Sn = [BiPoly()] * (n + 1)
    for m in range(1, n + 1):
        c_acc = BiPoly()
        s_acc = BiPoly()
        for k in range(1, m + 1):
            if Y[k].is_zero():
                continue
            c_acc = c_acc - Y[k] * Sn[m - k] * k
            s_acc = s_acc + Y[k] * C[m - k] * k
        C[m] = c_acc * (mpmath.mpf(1) / m)
        Sn[m] = s_acc * (mpmath.mpf(1) / m)
    return C, Sn


def _series_mul(a, b, n):
    out = []
    for m in range(n + 1):
        acc = BiPoly()
        for k in range(m + 1):
            if not a[k].is_zero() and not b[m - k].is_zero():
                acc = acc + a[k] * b[m - k]
        out.append(acc)
    return out


def _ferrers_bipoly(table: CoeffTable, a_vals, s: int) -> BiPoly:
    # real composite (F_s for even s, i F_s for odd s) as a polynomial in g = gamma, h = 1/eta
    terms = {}
    for k, c in enumerate(table.E[s].coeffs):
        if c == 0:
            continue
        v = c * (1j) ** k
        if s % 2:
            v = 1j * v
        terms[(k, 0)] = mpmath.re(v)
    tail = -((-1j) ** s) * a_vals[s] / s
    if s % 2:
        tail = 1j * tail
    terms[(0, s)] = terms.get((0, s), 0) + mpmath.re(tail)
    return BiPoly(terms)


def _eta_cot_eta(M):
    # eta cot eta = sum_n (-1)^n 2^{2n} B_{2n} eta^{2n} / (2n)!, as a Poly in eta
    c = [mpmath.mpf(0)] * (2 * M + 1)
    for n in range(M + 1):
        c[2 * n] = (-1) ** n * mpmath.mpf(4) ** n * mpmath.bernoulli(2 * n) / mpmath.factorial(2 * n)
    return Poly(c)


@dataclass(frozen=True)
class RemovableCoeff:
    """A re-expanded coefficient with its removable singularity at ``x = 1``.

    ``bipoly`` is the direct form in ``(gamma, 1/eta)``; ``taylor`` is the
    equivalent power series in ``eta`` obtained by substituting the Laurent
    series of ``cot eta`` (negative powers verified to cancel).
    """

    bipoly: BiPoly
    taylor: Poly

    def direct(self, gamma, eta):
        return self.bipoly(gamma, 1 / eta)

    def series(self, eta):
        return self.taylor(eta)

    def at_one(self):
        return self.taylor[0]

    def __call__(self, gamma, eta):
        if eta < LAURENT_SWITCH_ETA:
            return self.series(eta)
        return self.direct(gamma, eta)


def _laurent_reduce(bp: BiPoly, M: int, what: str) -> Poly:
    D = bp.max_total_degree
    width = 2 * M + D + 1
    ecot = _eta_cot_eta((width + 1) // 2)
    powers = [Poly([1])]
    for _ in range(max((j for j, _ in bp.terms), default=0)):
        powers.append(Poly((powers[-1] * ecot).coeffs[:width]))
    # index i of acc holds the coefficient of eta^{i - D}
    acc = [mpmath.mpf(0)] * width
    for (j, k), v in bp.terms.items():
        shift = D - (j + k)
        for m, c in enumerate(powers[j].coeffs):
            if shift + m < width:
                acc[shift + m] += v * c
    scale = max((abs(v) for v in bp.terms.values()), default=0)
    tol = (scale or 1) * mpmath.mpf(10) ** (-(mpmath.mp.dps - 8))
    for m in range(D):
        if abs(acc[m]) > tol:
            raise InternalConsistencyError(
                f"{what}: eta^{m - D} coefficient {mpmath.nstr(acc[m], 5)} does not vanish"
            )
    return Poly(acc[D : D + 2 * M + 1])


def reexpand_AB_ferrers(mu, S: int):
    """Re-expanded coefficients ``(A[1..S], B[0..S])``.

    ``A_mu(u,x) ~ 1 + sum_s A[s](x)/u^{2s}`` and ``B_mu(u,x) ~ sum_s B[s](x)/u^{2s+1}``.
    Each entry is a :class:`RemovableCoeff`.
    """
    if not 1 <= S <= REEXPAND_MAX_S:
        raise DomainError(f"re-expansion order must be in 1..{REEXPAND_MAX_S}", tag="reexpand")
    return _reexpand(*_key(to_mp(mu)), S)


@functools.lru_cache(maxsize=32)
def _reexpand(mu, _prec, S):
    n = 2 * S + 1
    tab = _build_F_E(mu, _prec, n)
    a_plain = tab.a
    a_tilde = _build_a(mu + 1, _prec, n)

    def split(a_vals):
        even = [BiPoly()] * (n + 1)
        odd = [BiPoly()] * (n + 1)
        for s in range(1, n + 1):
            bp = _ferrers_bipoly(tab, a_vals, s)
            (odd if s % 2 else even)[s] = bp
        return even, odd

    Xe, Yo = split(a_tilde)
    e = _series_exp(Xe, n)
    C, _ = _series_cos_sin(Yo, n)
    Aser = _series_mul(e, C, n)
    Xe, Yo = split(a_plain)
    e = _series_exp(Xe, n)
    _, Sn = _series_cos_sin(Yo, n)
    Bser = [bp.shift_h(1) for bp in _series_mul(e, Sn, n)]

    M = (mpmath.mp.dps + 10) // 2 + 4
    A = [None] + [RemovableCoeff(Aser[2 * s], _laurent_reduce(Aser[2 * s], M, f"A_{2 * s}")) for s in range(1, S + 1)]
    B = [RemovableCoeff(Bser[2 * s + 1], _laurent_reduce(Bser[2 * s + 1], M, f"B_{2 * s + 1}")) for s in range(S + 1)]
    return tuple(A), tuple(B)


# ---------------------------------------------------------------------------


def gamma_ratio_expansion_check(mu, u, N: int):
    """Relative residual between ``L_nu^mu`` and its large-``u`` exponential form."""
    from .specfun import gamma

    mu = to_mp(mu)
    u = to_mp(u)
    nu = u - mpmath.mpf(0.5)
    L = mpmath.sqrt((2 * nu + 1) * mpmath.pi) / (2 ** (nu + 1) * gamma(nu / 2 + mu / 2 + 1) * gamma(nu / 2 - mu / 2 + 1))
    tab = build_F_E(mu, N)
    expo = mpmath.fsum((-1) ** (s + 1) * tab.E[s](1) / u**s for s in range(1, N + 1))
    approx = mpmath.sqrt(u) / gamma(u + 1) * mpmath.exp(expo)
    return abs(approx / L - 1)
