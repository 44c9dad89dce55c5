import random

import mpmath
import pytest

from legasym import maps
from legasym.arith import Side
from legasym.coeffs import build_large_mu_F_E
from legasym.errors import BranchError, DomainError, RegimeError, SingularityError

TOL8 = mpmath.mpf(10) ** (8 - 40)


def test_xi_at_one_and_two():
    assert maps.xi_of_z(1) == 0
    assert abs(maps.xi_of_z(2) - mpmath.log(2 + mpmath.sqrt(3))) < TOL8


def test_xi_near_pole_series():
    for h in (mpmath.mpf("1e-2"), mpmath.mpf("1e-3")):
        d = maps.xi_of_z(1 + h) - mpmath.sqrt(2) * mpmath.sqrt(h) * (1 - h / 12)
        assert abs(d) < 0.01 * h**2.5 * 10
    # seam between the series and arccosh
    for h in (mpmath.mpf("0.0999"), mpmath.mpf("0.1001")):
        assert abs(maps.xi_of_z(1 + h) - mpmath.acosh(1 + h)) < TOL8


def test_xi_cut_needs_side():
    with pytest.raises(BranchError):
        maps.xi_of_z(mpmath.mpf("0.5"))
    assert abs(maps.xi_of_z(mpmath.mpf("0.5"), Side.ABOVE) - 1j * mpmath.acos(mpmath.mpf("0.5"))) < TOL8


def test_beta_values_and_involution():
    assert abs(maps.beta_of_z(2) - 2 / mpmath.sqrt(3)) < TOL8
    rng = random.Random(2)
    for _ in range(100):
        z = mpmath.mpc(rng.uniform(0.01, 20), rng.uniform(-20, 20))
        if abs(z - 1) < 1e-3:
            continue
        b = maps.beta_of_z(z)
        assert abs(maps.beta_of_z(b) - z) < TOL8 * abs(z)
        assert abs(b * b - 1 - 1 / (z * z - 1)) < TOL8 * abs(b * b)
        assert abs(maps.xi_from_beta(b) - maps.xi_of_z(z)) < TOL8 * max(1, abs(maps.xi_of_z(z)))
    with pytest.raises(SingularityError):
        maps.beta_of_z(1)


def test_beta_on_cut_sides():
    x = mpmath.mpf("0.6")
    g = x / mpmath.sqrt(1 - x * x)
    assert abs(maps.beta_of_z(x, Side.ABOVE) - (-1j * g)) < TOL8
    assert abs(maps.beta_of_z(x, Side.BELOW) - (1j * g)) < TOL8
    assert abs(maps.xi_of_z(x, Side.BELOW) + 1j * mpmath.acos(x)) < TOL8


def test_strip_mapping_and_schwarz_symmetry():
    rng = random.Random(4)
    slack = mpmath.mpf(10) ** -20
    for _ in range(200):
        r = 10 ** rng.uniform(-2, 3)
        z = r * mpmath.expj(rng.uniform(-mpmath.pi / 2, mpmath.pi / 2))
        if abs(z - 1) < 1e-6 or (abs(mpmath.im(z)) < 1e-30):
            continue
        xi = maps.xi_of_z(z)
        assert mpmath.re(xi) >= -slack
        assert abs(mpmath.im(xi)) <= mpmath.pi / 2 + slack
        assert abs(maps.xi_of_z(mpmath.conj(z)) - mpmath.conj(xi)) < TOL8 * max(1, abs(xi))


def test_large_z_behaviour():
    z = mpmath.mpf(1000)
    d = maps.xi_of_z(z) - mpmath.log(2 * z) + z**-2 / 4
    assert abs(d) < 10 * z**-4


def test_ferrers_vars():
    v = maps.ferrers_vars(0)
    assert v.eta == mpmath.pi / 2 and v.gamma == 0
    v = maps.ferrers_vars(1 / mpmath.sqrt(2))
    assert abs(v.eta - mpmath.pi / 4) < TOL8 and abs(v.gamma - 1) < TOL8
    for x in ("0.1", "0.5", "0.9"):
        v = maps.ferrers_vars(mpmath.mpf(x))
        assert abs(v.gamma - mpmath.cot(v.eta)) < TOL8 * max(1, v.gamma)
    with pytest.raises(DomainError):
        maps.ferrers_vars(1)


def test_gamma_minus_inverse_eta_removable():
    # gamma - 1/eta = cot eta - 1/eta = -eta/3 + O(eta^3)
    for e in (mpmath.mpf("1e-3"), mpmath.mpf("1e-5")):
        v = maps.ferrers_vars(mpmath.cos(e))
        assert abs((v.gamma - 1 / v.eta) / v.eta + mpmath.mpf(1) / 3) < e


def test_large_mu_vars():
    v = maps.large_mu_vars(mpmath.mpf("0.4"), alpha=0)
    assert v.p == mpmath.mpf("0.4") and abs(v.chi - mpmath.atanh(mpmath.mpf("0.4"))) < TOL8
    v0 = maps.large_mu_vars(0, alpha=mpmath.mpf("0.5"))
    assert v0.p == 0 and v0.chi == 0
    with pytest.raises(RegimeError):
        maps.large_mu_vars(0.2, alpha=1)


def test_dchi_dp_finite_difference():
    a2 = mpmath.mpf("0.25")
    p = maps.p_of_x(mpmath.mpf("0.3"), a2)
    fd = mpmath.diff(lambda t: maps.chi_of_p(t, a2), p)
    assert abs(fd / maps.dchi_dp(p, a2) - 1) < mpmath.mpf("1e-10")


def test_conical_chi_log_singularity():
    vals = [maps.large_mu_vars(1 - mpmath.mpf(10) ** -k, alpha_tilde=1).chi for k in (4, 8, 16)]
    # each factor 10^4 closer to 1 adds about (1/2) ln(10^4)
    assert vals[0] < vals[1] < vals[2]
    assert abs((vals[2] - vals[1]) - 4 * mpmath.log(10)) < 0.01


def test_schwarzian():
    for x in ("0", "0.3", "0.8"):
        x = mpmath.mpf(x)
        assert abs(maps.schwarzian_psi(x, alpha=0) - (1 - x * x) / 4) < TOL8
    for s in (1, -1):
        assert maps.schwarzian_psi(s, alpha=mpmath.mpf("0.4")) == 0


def test_schwarzian_matches_F1_F2():
    rng = random.Random(9)
    for _ in range(5):
        al = mpmath.mpf(rng.uniform(0, 0.9))
        x = mpmath.mpf(rng.uniform(-0.95, 0.95))
        tab = build_large_mu_F_E(al * al, 2)
        p = maps.p_of_x(x, al * al)
        F1, F2 = maps.schwarzian_F1_F2(x, alpha=al)
        assert abs(tab.F[1](p) - F1) < TOL8
        assert abs(tab.F[2](p) - F2) < mpmath.mpf("1e-10")
    tab = build_large_mu_F_E(-mpmath.mpf("0.49"), 2)
    x = mpmath.mpf("0.5")
    F1, F2 = maps.schwarzian_F1_F2(x, alpha_tilde=mpmath.mpf("0.7"))
    p = maps.p_of_x(x, -mpmath.mpf("0.49"))
    assert abs(tab.F[1](p) - F1) < TOL8 and abs(tab.F[2](p) - F2) < mpmath.mpf("1e-10")
