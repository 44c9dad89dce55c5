"""
Print the first few coefficient polynomials in beta.

E_s(beta) is odd/even in alternation and E_1 is -(4mu^2-1) beta / 8 up to a
constant; for mu = 1/2 every coefficient vanishes and the expansions become
exact.
"""

import mpmath

from legasym import coeffs

mpmath.mp.dps = 30

for mu in ("4.2", "0.5"):
    tab = coeffs.build_F_E(mpmath.mpf(mu), 4)
    print(f"mu = {mu}")
    for s in range(1, 5):
        terms = [mpmath.nstr(c, 8) for c in tab.E[s].coeffs]
        print(f"  E_{s}: {terms}")
    print()
