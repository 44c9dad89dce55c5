"""Dense univariate polynomials and sparse bivariate polynomials over mpmath scalars."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import mpmath

from .errors import InternalConsistencyError


def _zero_tol(scale):
    # remainders that should vanish exactly are compared against the data scale
    return (scale or 1) * mpmath.mpf(10) ** (-(mpmath.mp.dps - 6))


@dataclass(frozen=True)
class Poly:
    """Polynomial ``c[0] + c[1] x + ... + c[d] x**d``."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        c = [mpmath.mpmathify(v) for v in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (mpmath.mpf(0),))

    @classmethod
    def zero(cls) -> "Poly":
        return cls([0])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else mpmath.mpf(0)

    def __call__(self, x):
        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self), len(other))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly([-other]))

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        out = [mpmath.mpf(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def deriv(self) -> "Poly":
        return Poly([k * self.coeffs[k] for k in range(1, len(self))] or [0])

    def antideriv(self) -> "Poly":
        """Antiderivative vanishing at 0."""
        return Poly([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def divmod(self, d: "Poly"):
        a = list(self.coeffs)
        nd = len(d)
        if len(a) < nd:
            return Poly.zero(), Poly(a)
        q = [mpmath.mpf(0)] * (len(a) - nd + 1)
        lead = d.coeffs[-1]
        for k in range(len(q) - 1, -1, -1):
            q[k] = a[k + nd - 1] / lead
            for i, c in enumerate(d.coeffs):
                a[k + i] -= q[k] * c
        return Poly(q), Poly(a[: nd - 1] or [0])

    def exact_div(self, d: "Poly", what: str = "polynomial") -> "Poly":
        """Quotient by ``d``; the remainder must vanish to working precision.

        Divides from whichever end of ``d`` has the larger coefficient, so a
        small leading coefficient does not amplify rounding.
        """
        if abs(d.coeffs[0]) > abs(d.coeffs[-1]) and len(self) >= len(d):
            # ascending division; what is left over sits in the top coefficients
            a = list(self.coeffs)
            qc = [mpmath.mpf(0)] * (len(a) - len(d) + 1)
            for k in range(len(qc)):
                qc[k] = a[k] / d.coeffs[0]
                for i, c in enumerate(d.coeffs):
                    a[k + i] -= qc[k] * c
            q, r = Poly(qc), Poly(a[len(qc):])
        else:
            q, r = self.divmod(d)
        scale = max((abs(c) for c in self.coeffs), default=0)
        if any(abs(c) > _zero_tol(scale) for c in r.coeffs):
            raise InternalConsistencyError(f"{what} is not divisible: remainder {r.coeffs}")
        return q

    def parity(self) -> int | None:
        """+1 if even, -1 if odd, None otherwise (exact zero test)."""
        if self.is_zero():
            return 1
        if all(c == 0 for c in self.coeffs[1::2]):
            return 1
        if all(c == 0 for c in self.coeffs[0::2]):
            return -1
        return None

    def map(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])


class BiPoly:
    """Sparse polynomial in two symbols, stored as ``{(j, k): coeff}``.

    The Ferrers re-expansion uses it with ``g = gamma`` and ``h = 1/eta``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): mpmath.mpmathify(c)})

    @classmethod
    def from_poly_g(cls, p: Poly) -> "BiPoly":
        return cls({(j, 0): c for j, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, BiPoly) else -mpmath.mpmathify(other))

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        out = {}
        for (j1, k1), a in self.terms.items():
            for (j2, k2), b in other.terms.items():
                key = (j1 + j2, k1 + k2)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def shift_h(self, n: int = 1) -> "BiPoly":
        """Multiply by ``h**n``."""
        return BiPoly({(j, k + n): v for (j, k), v in self.terms.items()})

    def map(self, fn) -> "BiPoly":
        return BiPoly({k: fn(v) for k, v in self.terms.items()})

    def __call__(self, g, h):
        return mpmath.fsum(v * g**j * h**k for (j, k), v in self.terms.items())

    @property
    def max_total_degree(self) -> int:
        return max((j + k for j, k in self.terms), default=0)

    def __repr__(self):
        body = " + ".join(f"{mpmath.nstr(v, 8)}*g^{j}*h^{k}" for (j, k), v in sorted(self.terms.items()))
        return f"BiPoly({body or '0'})"
