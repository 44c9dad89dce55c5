import mpmath
import pytest

from legasym import expand, maps, oracle
from legasym.errors import RegimeError, SingularityError
from legasym.expand import Method

M = mpmath.mpf
with mpmath.workdps(40):
    NU, MU = M("20.3"), M("4.2")  # u = 20.8


def rel(a, b):
    return abs(a - b) / abs(b)


def ferrers_envelope(nu, mu, x):
    p = oracle.ferrers_ref("P", nu, mu, x)
    q = oracle.ferrers_ref("Q", nu, mu, x)
    return mpmath.sqrt(p * p + (2 * q / mpmath.pi) ** 2)


# ---------------------------------------------------------------- constants

def test_L_const_half_half():
    h = M("0.5")
    assert rel(expand.L_const(h, h), mpmath.sqrt(2 * mpmath.pi) / (2 ** M(1.5) * mpmath.gamma(M(1.5)))) < M(10) ** -38


def test_L_conical_modulus():
    tau = M(5)
    L = expand.L_conical(tau, 0)
    ref = expand.L_const(mpmath.mpc(-0.5, tau), 0)
    assert rel(abs(L), abs(ref)) < M(10) ** -35


# ---------------------------------------------------------------- large nu

@pytest.mark.parametrize("which", ["P_minus", "Q"])
def test_large_nu_at_one_point_five(which):
    z = M("1.5")
    r = expand.legendre_large_nu(which, NU, MU, z)
    ref = oracle.P_oracle(NU, MU, z) if which == "P_minus" else oracle.Q_ref(NU, MU, z)
    assert r.method is Method.DIRECT and r.N == 11
    assert rel(r.value, ref) < M("5e-16")


@pytest.mark.parametrize("z", [M("1.1"), mpmath.mpc("1.2", "0.3"), M(3), mpmath.mpc(2, 1)])
def test_large_nu_cauchy_and_direct_paths(z):
    r = expand.legendre_large_nu("P_minus", NU, MU, z)
    assert r.method is (Method.CAUCHY if abs(z - 1) < M("0.5") else Method.DIRECT)
    assert rel(r.value, oracle.P_oracle(NU, MU, z)) < M("1e-18")
    q = expand.legendre_large_nu("Q", NU, MU, z)
    assert rel(q.value, oracle.Q_ref(NU, MU, z)) < M("1e-18")


def test_large_nu_P_plus_and_branches():
    z = M(2)
    assert rel(expand.legendre_large_nu("P_plus", NU, MU, z).value, oracle.P_oracle(NU, -MU, z)) < M("1e-18")
    mu = M("1.3")
    Q = expand.legendre_large_nu("Q", NU, mu, z).value
    Qp = expand.legendre_large_nu("Q_branch+", NU, mu, z).value
    Qm = expand.legendre_large_nu("Q_branch-", NU, mu, z).value
    # continuation around z = -1 and back
    assert abs(mpmath.cospi(mu) * Q - (Qp + Qm) / 2) < M("1e-18") * max(abs(Q), abs(Qp), abs(Qm))


def _extract_AB(nu, mu, z):
    u = nu + M(0.5)
    xi = maps.xi_of_z(z)
    pre = expand.L_const(nu, mu) * (z * z - 1) ** (-M(1) / 4) * mpmath.sqrt(xi)
    x = u * xi
    p = oracle.P_oracle(nu, mu, z) / (pre * mpmath.gamma(nu - mu + 1))
    q = oracle.Q_ref(nu, mu, z) / pre
    # Wronskian of I and K inverts the two-function system
    A = x * (p * mpmath.besselk(mu + 1, x) + q * mpmath.besseli(mu + 1, x))
    B = u * (mpmath.besselk(mu, x) * p - mpmath.besseli(mu, x) * q)
    return A, B


def test_AB_match_oracle_extraction():
    z = M(2)
    A, B = _extract_AB(NU, MU, z)
    A2, B2 = expand.AB_large_nu(MU, NU + M(0.5), z, 11)[:2]
    assert rel(A2, A) < M("1e-18") and rel(B2, B) < M("1e-18")


def test_AB_error_order():
    # N = 3: error in A should fall like u^-8
    z, N = M(2), 3
    errs = []
    for nu in (M("9.5"), M("19.5"), M("39.5")):
        A, _ = _extract_AB(nu, MU, z)
        errs.append(abs(expand.AB_large_nu(MU, nu + M(0.5), z, N)[0] - A))
    for e0, e1 in zip(errs, errs[1:]):
        slope = mpmath.log(e0 / e1, 2)
        assert abs(slope - (2 * N + 2)) < M("0.15") * (2 * N + 2), slope


def test_AB_trivial_limits():
    z = M(2)
    A, B = expand.AB_large_nu(MU, M(10) ** 8, z, 4)[:2]
    assert abs(A - 1) < M("1e-14") and abs(maps.xi_of_z(z) * B) < M("1e-6")
    A, B = expand.AB_large_nu(M(0.5), M("20.8"), z, 6)[:2]
    assert B == 0 or abs(B) < M(10) ** -38


def test_A_tends_to_M_constant_at_one():
    u = NU + M(0.5)
    Mc = (2 / u) ** (MU + M(0.5)) * mpmath.gamma(NU / 2 + MU / 2 + 1) / mpmath.gamma(NU / 2 - MU / 2 + M(0.5))
    e4 = rel(expand.legendre_large_nu("P_minus", NU, MU, 1 + M("1e-4")).A, Mc)
    e6 = rel(expand.legendre_large_nu("P_minus", NU, MU, 1 + M("1e-6")).A, Mc)
    assert e4 < M("1e-4") and 50 < e4 / e6 < 200


def test_recessive_limits():
    z = 1 + M("1e-4")
    P = expand.legendre_large_nu("P_minus", NU, MU, z).value
    assert rel(P / ((z - 1) / 2) ** (MU / 2), 1 / mpmath.gamma(MU + 1)) < M("0.01")
    z = M("1e4")
    Q = expand.legendre_large_nu("Q", NU, MU, z).value
    lim = mpmath.sqrt(mpmath.pi) / (mpmath.gamma(NU + M(1.5)) * 2 ** (NU + 1))
    assert rel(z ** (NU + 1) * Q, lim) < M("0.01")


def test_regime_guards():
    with pytest.raises(RegimeError):
        expand.legendre_large_nu("Q", NU, MU, mpmath.mpc(-2, 1))
    with pytest.raises(SingularityError):
        expand.legendre_large_nu("Q", NU, MU, 1)


# ---------------------------------------------------------------- imaginary order

def test_imag_order_realness_and_oracle():
    rho, z = M("4.2"), M(3)
    q = expand.legendre_large_nu_imag_mu("Q", rho, NU, z)
    assert abs(mpmath.im(q.value)) < M("1e-15") * abs(q.value)
    assert rel(q.value, oracle.Q_ref(NU, mpmath.mpc(0, rho), z)) < M("1e-15")
    p = expand.legendre_large_nu_imag_mu("P_minus", rho, NU, z)
    assert rel(p.value, oracle.P_oracle(NU, mpmath.mpc(0, rho), z)) < M("1e-15")


def test_imag_order_B_symmetry():
    rho, z, u = M("4.2"), M(3), NU + M(0.5)
    _, Bp = expand.AB_large_nu(mpmath.mpc(0, rho), u, z, 11)[:2]
    _, Bm = expand.AB_large_nu(mpmath.mpc(0, -rho), u, z, 11)[:2]
    assert abs(Bp - Bm) < M(10) ** -35 * abs(Bp)


@pytest.mark.parametrize("k", [6, 8])
def test_P_hat_oscillation_near_one(k):
    rho = M("4.2")
    z = 1 + M(10) ** -k
    v = expand.legendre_large_nu_imag_mu("P_hat", rho, NU, z).value
    amp = mpmath.sqrt(mpmath.sinh(mpmath.pi * rho) / (mpmath.pi * rho))
    approx = amp * mpmath.cos(rho / 2 * mpmath.log((z - 1) / 2) - mpmath.arg(mpmath.gamma(1 + 1j * rho)))
    assert abs(mpmath.im(v)) < M("1e-15") * abs(v)
    assert abs(v - approx) < M("0.01") * amp


# ---------------------------------------------------------------- conical

def test_conical_P_real_and_accurate():
    tau, mu, z = M(30), M("1.3"), M(2)
    r = expand.conical_large_tau("P_minus", tau, mu, z)
    assert abs(mpmath.im(r.value)) < M("1e-12") * abs(r.value)
    assert rel(r.value, oracle.P_oracle(mpmath.mpc(-0.5, tau), mu, z)) < M("1e-18")
    q = expand.conical_large_tau("Q", tau, mu, z)
    assert rel(q.value, oracle.Q_ref(mpmath.mpc(-0.5, tau), mu, z)) < M("1e-18")


def test_conical_cos_identity():
    tau, mu, z = M(30), M("1.3"), M(2)
    Q = expand.conical_large_tau("Q", tau, mu, z).value
    Qp = expand.conical_large_tau("Q_branch+", tau, mu, z).value
    Qm = expand.conical_large_tau("Q_branch-", tau, mu, z).value
    scale = max(abs(Q), abs(Qp), abs(Qm))
    assert abs(mpmath.cospi(mu) * Q - (Qp + Qm) / 2) < M("1e-12") * scale


@pytest.mark.parametrize("branch, which", [(0, "Q"), (-1, "Q_branch-")])
def test_conical_matches_LG_form(branch, which):
    tau, mu, z = M(30), M("1.3"), M(3)
    lg = expand.conical_Q_LG(tau, mu, z, N=8, branch=branch).value
    bes = expand.conical_large_tau(which, tau, mu, z).value
    assert rel(lg, bes) < M("1e-9")


# ---------------------------------------------------------------- large mu

def test_large_mu_against_oracle():
    nu, mu = M("4.8"), M("20.3")
    for z in (M("1.5"), M(3)):
        r = expand.legendre_large_mu("P_minus", nu, mu, z, N=10)
        assert rel(r.value, oracle.P_oracle(nu, mu, z)) < M("1e-10")
        r = expand.legendre_large_mu("Q", nu, mu, z, N=10)
        assert rel(r.value, oracle.Q_ref(nu, mu, z)) < M("1e-10")


def test_large_mu_far_point_uses_cauchy():
    nu, mu, z = M("4.8"), M("20.3"), M(1000)
    r = expand.legendre_large_mu("P_minus", nu, mu, z, N=10)
    assert r.method is Method.CAUCHY
    assert rel(r.value, oracle.P_oracle(nu, mu, z)) < M("1e-9")


def test_large_mu_conical_degree_real():
    nu = mpmath.mpc(-0.5, M("0.7"))
    r = expand.legendre_large_mu("P_minus_conical", nu, M("20.3"), M(2), N=10)
    assert abs(mpmath.im(r.value)) < M("1e-30") * abs(r.value)
    assert rel(r.value, oracle.P_oracle(nu, M("20.3"), M(2))) < M("1e-10")


def test_large_mu_bounded_degree_contract():
    with pytest.raises(RegimeError):
        expand.legendre_large_mu("P_minus", M(30), M("20.3"), M(2))


def test_large_mu_imag():
    nu, rho, z = M("1.2"), M(25), M(2)
    p = expand.legendre_large_mu_imag("P_minus", nu, rho, z)
    q = expand.legendre_large_mu_imag("Q", nu, rho, z)
    assert rel(p.value, oracle.P_oracle(nu, mpmath.mpc(0, rho), z)) < M("1e-9")
    assert rel(q.value, oracle.Q_ref(nu, mpmath.mpc(0, rho), z)) < M("1e-9")
    nt = mpmath.mpc(-0.5, M("0.7"))
    pt = expand.legendre_large_mu_imag("P_minus", nt, rho, z)
    assert rel(pt.value, oracle.P_oracle(nt, mpmath.mpc(0, rho), z)) < M("1e-9")
    A, _ = expand.AB_large_mu(nu + M(0.5), mpmath.mpc(0, M(10) ** 8), maps.beta_of_z(z), 4)[:2]
    assert abs(A - 1) < M("1e-12")


# ---------------------------------------------------------------- Ferrers

@pytest.mark.parametrize("x", ["0", "0.5", "0.9", "0.999"])
def test_ferrers_large_nu_envelope(x):
    x = M(x)
    env = ferrers_envelope(NU, MU, x)
    for which, scale in (("P", 1), ("Q", mpmath.pi / 2)):
        r = expand.ferrers_large_nu(which, NU, MU, x)
        assert r.method is (Method.REEXPANDED if x > M("0.5") else Method.DIRECT)
        # N = 5 leaves an envelope-relative error of at most ~1.6e-10 on [0, 1)
        assert abs(r.value - oracle.ferrers_ref(which, NU, MU, x)) < M("2e-10") * env * scale


def test_ferrers_x_zero_closed_form():
    exact = mpmath.sqrt(mpmath.pi) / (2 ** MU * mpmath.gamma(NU / 2 + MU / 2 + 1) * mpmath.gamma(MU / 2 + M(0.5) - NU / 2))
    assert rel(oracle.ferrers_ref("P", NU, MU, 0), exact) < M(10) ** -30
    r = expand.ferrers_large_nu("P", NU, MU, M(0))
    assert abs(r.value - exact) < M("1e-10") * ferrers_envelope(NU, MU, M(0))


def test_ferrers_conical():
    tau, mu, x = M(30), M(2), M("0.5")
    r = expand.ferrers_conical(tau, mu, x, N=8)
    assert abs(mpmath.im(r.value)) < M("1e-12") * abs(r.value)
    assert rel(mpmath.re(r.value), oracle.ferrers_ref("P", mpmath.mpc(-0.5, tau), mu, x)) < M("1e-9")
    big = expand.ferrers_conical(M(10) ** 6, mu, x, N=2)
    assert abs(big.A - 1) < M("1e-10")


def test_LG_exact_at_zero():
    nu, mu = M("4.8"), M("20.3")
    exact = mpmath.sqrt(mpmath.pi) / (2 ** mu * mpmath.gamma(nu / 2 + mu / 2 + 1) * mpmath.gamma(mu / 2 + M(0.5) - nu / 2))
    r = expand.ferrers_large_mu_LG(1, mu, M(0), nu=nu)
    assert rel(r.value, exact) < M(10) ** -36


@pytest.mark.parametrize("x", ["0.33", "0.8"])
def test_LG_both_signs(x):
    nu, mu, x = M("4.8"), M("20.3"), M(x)
    for sign in (1, -1):
        r = expand.ferrers_large_mu_LG(sign, mu, x, nu=nu)
        assert rel(r.value, oracle.ferrers_ref("P", nu, mu, sign * x)) < M("1e-10")


def test_LG_conical_degree_real():
    r = expand.ferrers_large_mu_LG(1, M("20.3"), M("0.4"), tau=M("0.7"))
    assert mpmath.im(r.value) == 0
    assert rel(r.value, oracle.ferrers_ref("P", mpmath.mpc(-0.5, M("0.7")), M("20.3"), M("0.4"))) < M("1e-10")


# ---------------------------------------------------------------- dispatch

def test_evaluate_dispatch_matches_direct_call():
    req = expand.RegimeRequest(regime=expand.Regime.LARGE_NU, which="Q", nu=NU, mu=MU, z=M("1.5"))
    assert expand.evaluate(req).value == expand.legendre_large_nu("Q", NU, MU, M("1.5")).value
    d = expand.evaluate(req).as_dict()
    assert d["method"] == "direct" and d["N"] == 11
