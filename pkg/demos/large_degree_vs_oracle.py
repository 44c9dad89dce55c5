"""
Large-degree Legendre values next to the hypergeometric oracle.

Holds mu = 4.2 fixed and walks the degree upwards at z = 1.5, printing the
relative error of the truncated expansion for a few truncation orders.  The
error should fall by roughly 2^(2N+2) each time the degree doubles.
"""

import mpmath

from legasym import expand, oracle

mpmath.mp.dps = 40

mu = mpmath.mpf("4.2")
z = mpmath.mpf("1.5")

print(f"{'nu':>8} {'N':>3} {'rel. error':>12}")
for nu in ("10.3", "20.3", "40.3", "80.3"):
    nu = mpmath.mpf(nu)
    exact = oracle.P_oracle(nu, mu, z)
    for N in (3, 6, 11):
        approx = expand.legendre_large_nu("P_minus", nu, mu, z, N=N).value
        err = abs(approx - exact) / abs(exact)
        print(f"{mpmath.nstr(nu, 4):>8} {N:>3} {mpmath.nstr(err, 3):>12}")
