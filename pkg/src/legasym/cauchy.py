"""Periodic trapezoid rule for Cauchy integrals on circles, and curve maximisation."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .arith import to_complex, to_mp
from .errors import GeometryError, QuadratureError

M_START = 256
M_MAX = 2**14

# (key, precision) -> {M: node values}; filled once per key, then only read
_NODE_CACHE: dict = {}


@dataclass(frozen=True)
class Contour:
    """Positively oriented circle ``|t - centre| = radius`` with ``M`` equispaced nodes."""

    centre: object = 1
    radius: object = 1
    M: int = M_START

    def __post_init__(self):
        if self.M < 64 or self.M & (self.M - 1):
            raise GeometryError(f"node count must be a power of two >= 64, got {self.M}")
        if to_mp(self.radius) <= 0:
            raise GeometryError("radius must be positive")

    def node(self, k: int, M: int | None = None):
        M = M or self.M
        return to_complex(self.centre) + to_mp(self.radius) * mpmath.expjpi(mpmath.mpf(2 * k) / M)

    def nodes(self, M: int | None = None):
        M = M or self.M
        return [self.node(k, M) for k in range(M)]


def clear_cache():
    _NODE_CACHE.clear()


def _node_values(f, contour: Contour, M: int, cache_key):
    if cache_key is None:
        return [f(t) for t in contour.nodes(M)]
    key = (cache_key, to_complex(contour.centre), to_mp(contour.radius), mpmath.mp.prec)
    store = _NODE_CACHE.setdefault(key, {})
    if M in store:
        return store[M]
    half = store.get(M // 2)
    if half is not None:
        # nodes of M/2 are the even-indexed nodes of M
        vals = [None] * M
        vals[0::2] = half
        for k in range(1, M, 2):
            vals[k] = f(contour.node(k, M))
    else:
        vals = [f(t) for t in contour.nodes(M)]
    store[M] = vals
    return vals


def _trapezoid(values, contour: Contour, z, M):
    c = to_complex(contour.centre)
    weights = []
    for k in range(M):
        t = contour.node(k, M)
        weights.append((t - c) / (t - z))
    if isinstance(values[0], tuple):
        return tuple(mpmath.fsum(v[i] * w for v, w in zip(values, weights)) / M for i in range(len(values[0])))
    return mpmath.fsum(v * w for v, w in zip(values, weights)) / M


def cauchy_eval(f, contour: Contour, z, tol=None, max_M: int = M_MAX, cache_key=None):
    """``(2 pi i)^{-1} oint f(t)/(t - z) dt`` by the trapezoid rule with node doubling.

    ``f`` may return a scalar or a tuple (each component integrated).  Stops
    when two successive node counts agree to ``tol`` relatively (default
    ``10^{-(P-6)}``).  ``cache_key`` enables reuse of node values across calls.
    """
    z = to_complex(z)
    c = to_complex(contour.centre)
    R = to_mp(contour.radius)
    d = abs(z - c)
    if R - d < mpmath.mpf("0.05") * R:
        raise GeometryError(f"z is too close to (or outside) the contour: |z - c| = {mpmath.nstr(d, 6)}")
    if tol is None:
        tol = mpmath.mpf(10) ** (-(mpmath.mp.dps - 6))
    M = contour.M
    prev = _trapezoid(_node_values(f, contour, M, cache_key), contour, z, M)
    while M < max_M:
        M *= 2
        cur = _trapezoid(_node_values(f, contour, M, cache_key), contour, z, M)
        a = cur if isinstance(cur, tuple) else (cur,)
        b = prev if isinstance(prev, tuple) else (prev,)
        if all(abs(x - y) <= tol * max(abs(x), mpmath.mpf(10) ** (-mpmath.mp.dps)) for x, y in zip(a, b)):
            return cur
        prev = cur
    raise QuadratureError(f"trapezoid rule did not converge by M = {max_M}")


def l_zero(z, contour: Contour | None = None, tol=mpmath.mpf("1e-12")):
    """``oint |dt / (t - z)|`` over the contour (default the unit circle about 1)."""
    contour = contour or Contour(1, 1)
    z = to_complex(z)
    c = to_complex(contour.centre)
    R = to_mp(contour.radius)
    if abs(abs(z - c) - R) < mpmath.mpf(10) ** (-mpmath.mp.dps // 2):
        raise GeometryError("z lies on the contour")
    if abs(z - c) > R:
        raise GeometryError("z lies outside the contour")

    def total(M):
        return 2 * mpmath.pi * R / M * mpmath.fsum(
            1 / abs(c + R * mpmath.expjpi(mpmath.mpf(2 * k) / M) - z) for k in range(M)
        )

    M = 64
    prev = total(M)
    while M < M_MAX:
        M *= 2
        cur = total(M)
        if abs(cur - prev) < tol:
            return cur
        prev = cur
    raise QuadratureError("l_zero quadrature did not converge")


def sample_grid(a, b, samples: int):
    """``samples`` equispaced parameters on ``[a, b]``, both ends included."""
    a = to_mp(a)
    b = to_mp(b)
    h = (b - a) / (samples - 1)
    return [a + k * h for k in range(samples)]


def curve_max(f, a, b, samples: int = 256, xtol=None, values=None):
    """Maximum of real ``f`` on ``[a, b]``: best of ``samples`` equispaced points,
    refined by golden-section search on the neighbouring bracket.

    ``values`` may hold ``f`` already evaluated on :func:`sample_grid`.
    Returns ``(value, argmax)``.
    """
    if samples < 2:
        raise ValueError("need at least two samples")
    ts = sample_grid(a, b, samples)
    vals = list(values) if values is not None else [f(t) for t in ts]
    if len(vals) != samples:
        raise ValueError("values do not match the sample grid")
    i = max(range(samples), key=lambda k: vals[k])
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, samples - 1)]
    xtol = xtol or mpmath.mpf(10) ** -10
    g = (mpmath.sqrt(5) - 1) / 2
    x1 = hi - g * (hi - lo)
    x2 = lo + g * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > xtol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + g * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - g * (hi - lo)
            f1 = f(x1)
    best = max([(vals[i], ts[i]), (f1, x1), (f2, x2)], key=lambda p: p[0])
    return best
