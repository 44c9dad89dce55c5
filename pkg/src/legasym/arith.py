"""Extended-precision scalars and principal-branch elementary functions.

All computation runs on :mod:`mpmath` ``mpf``/``mpc`` values.  The working
precision is expressed in significant decimal digits; :class:`Precision` is an
immutable handle that can be installed globally (:func:`set_precision`) or used
as a context manager for a temporary change.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Union

import mpmath
from mpmath import mp

from .errors import BranchError, ConfigurationError, DomainError

BigReal = mpmath.mpf
BigComplex = mpmath.mpc
Number = Union[int, float, complex, str, mpmath.mpf, mpmath.mpc]

MIN_DIGITS = 16
_SAVED: list[int] = []
ENV_DIGITS = "LEGASYM_DIGITS"


@dataclass(frozen=True)
class Precision:
    digits: int

    def __post_init__(self):
        if int(self.digits) != self.digits or self.digits < MIN_DIGITS:
            raise ConfigurationError(
                f"precision must be an integer >= {MIN_DIGITS} digits, got {self.digits!r}"
            )

    def install(self) -> "Precision":
        mp.dps = self.digits
        return self

    def __enter__(self) -> "Precision":
        _SAVED.append(mp.prec)
        mp.dps = self.digits
        return self

    def __exit__(self, *exc) -> None:
        mp.prec = _SAVED.pop()

    @property
    def eps(self) -> mpmath.mpf:
        return mpmath.mpf(10) ** (-self.digits)


FAST = Precision(16)
VERIFY = Precision(40)
PROFILES = {"fast": FAST, "verify": VERIFY}


def set_precision(digits: int) -> Precision:
    """Install ``digits`` significant digits globally and return the handle."""
    return Precision(digits).install()


def current_precision() -> Precision:
    return Precision(max(mp.dps, MIN_DIGITS))


def default_precision() -> Precision:
    """Precision named by ``$LEGASYM_DIGITS`` (a digit count or profile name)."""
    raw = os.environ.get(ENV_DIGITS)
    if not raw:
        return VERIFY
    if raw.lower() in PROFILES:
        return PROFILES[raw.lower()]
    try:
        return Precision(int(raw))
    except ValueError:
        raise ConfigurationError(f"bad {ENV_DIGITS} value {raw!r}") from None


def eps() -> mpmath.mpf:
    return mpmath.mpf(10) ** (-mp.dps)


def to_mp(x: Number):
    """Convert to ``mpf`` when real, ``mpc`` otherwise, at working precision."""
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return +x
    if isinstance(x, complex):
        return x.imag and mpmath.mpc(x) or mpmath.mpf(x.real)
    if isinstance(x, str):
        v = mpmath.mpmathify(x.strip().replace(" ", "").replace("i", "j"))
        return v.real if isinstance(v, mpmath.mpc) and v.imag == 0 else v
    return mpmath.mpf(x)


def to_complex(x: Number) -> mpmath.mpc:
    return mpmath.mpc(to_mp(x))


class Side(enum.Enum):
    """Which edge of a branch cut a real point is approached from."""

    ABOVE = 1
    BELOW = -1

    @classmethod
    def parse(cls, value) -> "Side | None":
        if value is None or isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        if key in ("above", "+", "+i0", "up", "1"):
            return cls.ABOVE
        if key in ("below", "-", "-i0", "down", "-1"):
            return cls.BELOW
        raise ValueError(f"unknown cut side {value!r}")


def csqrt(w, side: Side | None = None):
    """Principal square root; ``side`` resolves the negative real axis."""
    w = to_complex(w)
    if w.imag == 0 and w.real < 0 and side is not None:
        return mpmath.mpc(0, side.value * mpmath.sqrt(-w.real))
    return mpmath.sqrt(w)


def cpow(w, a, side: Side | None = None):
    """Principal power ``w**a``; ``side`` resolves the negative real axis."""
    w = to_complex(w)
    if w.imag == 0 and w.real < 0 and side is not None:
        return mpmath.power(-w.real, a) * mpmath.expjpi(side.value * a)
    if w == 0:
        return mpmath.mpc(0) if mpmath.re(a) > 0 else mpmath.power(w, a)
    return mpmath.power(w, a)


def clog(w, side: Side | None = None):
    w = to_complex(w)
    if w == 0:
        raise DomainError("log(0)", tag="log")
    if w.imag == 0 and w.real < 0 and side is not None:
        return mpmath.mpc(mpmath.log(-w.real), side.value * mpmath.pi)
    return mpmath.log(w)


def _atan2(z):
    z = to_complex(z)
    if z.imag != 0:
        raise DomainError("atan2 takes a real pair packed as y + i*x", tag="atan2")
    return mpmath.atan2(z.real, 1)


_ELEMENTARY = {
    "exp": mpmath.exp,
    "log": mpmath.log,
    "sqrt": mpmath.sqrt,
    "sin": mpmath.sin,
    "cos": mpmath.cos,
    "sinh": mpmath.sinh,
    "cosh": mpmath.cosh,
    "arccos": mpmath.acos,
    "arctanh": mpmath.atanh,
    "arccosh": mpmath.acosh,
    "arccoth": mpmath.acoth,
}


def principal_elementary(tag: str, z, side: Side | None = None, exponent=None):
    """Evaluate the named elementary function on its principal branch.

    ``side`` selects the limiting value on the negative real axis for the
    functions with a cut there (``log``, ``sqrt``, ``pow``).
    """
    z = to_complex(z)
    if tag in ("log", "sqrt", "pow"):
        if z == 0 and tag == "log":
            raise DomainError("log(0)", tag=tag)
        if tag == "log":
            return clog(z, side)
        if tag == "sqrt":
            return csqrt(z, side)
        if exponent is None:
            raise DomainError("pow needs an exponent", tag=tag)
        return cpow(z, exponent, side)
    if tag == "atan2":
        raise DomainError("use mpmath.atan2(y, x) for real pairs", tag=tag)
    if tag in ("arctanh", "arccoth") and z in (1, -1):
        raise DomainError(f"{tag} is singular at {z}", tag=tag)
    try:
        fn = _ELEMENTARY[tag]
    except KeyError:
        raise DomainError(f"unknown elementary function {tag!r}", tag=tag) from None
    if side is not None and z.imag == 0:
        # nudge onto the requested edge of the cut by a sub-ulp amount
        z = mpmath.mpc(z.real, side.value * eps() ** 2)
    return fn(z)


def require_side(z, side: Side | None, cut_max, what: str):
    """Raise when ``z`` lies on the real cut ``(-inf, cut_max]`` with no side given."""
    z = to_complex(z)
    if z.imag == 0 and z.real <= cut_max and side is None:
        raise BranchError(f"{what}: z={mpmath.nstr(z.real, 8)} lies on the cut; pass side=")
