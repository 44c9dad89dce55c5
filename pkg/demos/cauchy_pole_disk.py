"""
Coefficient functions A, B close to z = 1.

The composite sums for A and B cancel badly near the turning point, so inside
a small disk they are recovered from a trapezoidal Cauchy integral over a
circle where the direct sums are still clean.  This script prints both routes
side by side as z approaches 1.
"""

import mpmath

from legasym import expand, verify
from legasym.errors import TruncationError

mpmath.mp.dps = 40

mu, u, N = mpmath.mpf("4.2"), mpmath.mpf("20.8"), 11

for d in ("0.5", "0.2", "0.1", "0.01"):
    z = 1 + mpmath.mpf(d)
    A_c, B_c = expand.AB_near_pole(mu, u, z, N)
    try:
        A_d = expand.AB_large_nu(mu, u, z, N)[0]
        gap = mpmath.nstr(abs(A_d - A_c), 3)
    except TruncationError as exc:
        gap = f"direct refused ({exc})"
    print(f"z = 1 + {d:<5}  A = {mpmath.nstr(mpmath.re(A_c), 18):>22}  |A_direct - A| = {gap}")

# the bound used for the R-cauchy residual: the Lebesgue-type constant of the rule
print("l0 max on the disk:", mpmath.nstr(verify.l0_max()[0], 12))
