"""
Reproduce the recorded residual maxima.

Runs the four verifiers at a coarse sample count and prints measured against
recorded values.  Expect well under a minute on one core.
"""

import mpmath

from legasym import verify

mpmath.mp.dps = 40

for name, fn in verify.VERIFIERS.items():
    rep = fn() if name == "identities" else fn(samples=64)
    flag = "PASS" if rep.passed else "FAIL"
    print(f"{flag} {name:10s} {rep.measured}")
