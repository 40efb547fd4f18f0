"""Precision contract and elementary arithmetic shared by every other module.

All high-precision values are mpmath ``mpf``/``mpc`` numbers; a
:class:`PrecisionCtx` pins the number of significant decimal digits a
computation is expected to deliver, and every operation widens its working
precision internally so that the advertised digits survive rounding.
Reductions are always performed in a fixed, documented index order, so a
given context yields bit-identical results run to run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import mpmath
from mpmath import mp, mpc, mpf, workdps

__all__ = [
    "PrecisionCtx",
    "DomainError",
    "PrecisionUnachievableError",
    "elem",
    "binom_exact",
    "hreal_to_str",
    "hcomplex_to_str",
    "str_to_hreal",
    "bernoulli_fraction",
]

HReal = mpf
HComplex = mpc
Number = Union[mpf, mpc, int, float]

#: Hard ceiling on internal working precision (decimal digits).  Operations
#: that would have to widen beyond this raise PrecisionUnachievableError
#: instead of silently returning garbage.
MAX_WORKING_DIGITS = 100_000


class DomainError(ValueError):
    """Argument outside an operation's mathematical domain (log(0), ...)."""


class PrecisionUnachievableError(ArithmeticError):
    """The requested accuracy would exceed the configured precision ceiling."""


@dataclass(frozen=True)
class PrecisionCtx:
    """Target significant decimal digits for a computation.

    digits >= 15; every elementary operation performed inside this context
    carries relative error at most 10**(1 - digits).
    """

    digits: int

    def __post_init__(self):
        if self.digits < 15:
            raise ValueError(f"PrecisionCtx requires digits >= 15, got {self.digits}")

    def working(self, extra: int = 10) -> int:
        wd = self.digits + extra
        if wd > MAX_WORKING_DIGITS:
            raise PrecisionUnachievableError(
                f"working precision {wd} exceeds ceiling {MAX_WORKING_DIGITS}"
            )
        return wd


_ELEM_FNS = ("exp", "log", "atan", "sin", "cos", "sqrt", "pow")


def elem(fn_name: str, x: Number, ctx: PrecisionCtx, y: Number | None = None):
    """Elementary function evaluation at context precision.

    fn_name is one of exp, log, atan, sin, cos, sqrt, pow (pow takes the
    exponent as ``y``).  log and sqrt use the principal branch with the cut on
    the negative real axis.  Results are correct to ctx.digits - 2 digits.
    """
    if fn_name not in _ELEM_FNS:
        raise ValueError(f"unknown elementary function {fn_name!r}")
    with workdps(ctx.working(5)):
        if fn_name == "pow":
            if y is None:
                raise ValueError("pow requires a second argument")
            return +mpmath.power(x, y)
        if fn_name == "log" and x == 0:
            raise DomainError("log(0) is undefined")
        if fn_name == "sqrt" and (not isinstance(x, mpc)) and mpf(x) < 0:
            # stay on the principal branch but keep real inputs real-typed
            return +mpc(0, mp.sqrt(-mpf(x)))
        fn = getattr(mp, fn_name)
        return +fn(x)


def binom_exact(n: int, k: int) -> int:
    """Exact binomial coefficient as an arbitrary-size integer (k <= n)."""
    if k < 0 or n < 0:
        raise ValueError("binom_exact requires nonnegative arguments")
    if k > n:
        raise ValueError(f"binom_exact requires k <= n, got ({n}, {k})")
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Decimal serialization: "+d.ddd...e+xx" with exactly ``digits`` significant
# digits.  Round-trips exactly: parse -> format reproduces the same string.
# ---------------------------------------------------------------------------

def hreal_to_str(x: Number, digits: int) -> str:
    with workdps(digits + 15):
        v = mpf(x)
        if mpmath.isnan(v):
            return "nan"
        if mpmath.isinf(v):
            return ("+" if v > 0 else "-") + "inf"
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if a == 0:
            mant = "0." + "0" * (digits - 1)
            return f"{sign}{mant}e+00"
        e = int(mp.floor(mp.log10(a)))
        # scale to [1, 10); guard against boundary rounding
        m = a / mpf(10) ** e
        if m >= 10:
            m /= 10
            e += 1
        elif m < 1:
            m *= 10
            e -= 1
        q = mpmath.nstr(m, digits, strip_zeros=False)
        if "." not in q:
            q += "."
        ip, fp = q.split(".")
        if len(ip) > 1:  # rounding pushed mantissa to 10.0...
            e += len(ip) - 1
            fp = (ip[1:] + fp)[: digits - 1]
            ip = ip[0]
        fp = (fp + "0" * digits)[: digits - 1]
        esign = "+" if e >= 0 else "-"
        return f"{sign}{ip}.{fp}e{esign}{abs(e):02d}"


def str_to_hreal(s: str, digits: int) -> mpf:
    with workdps(digits + 15):
        return mpf(s)


def hcomplex_to_str(z: Number, digits: int) -> str:
    with workdps(digits + 15):
        z = mpc(z)
        return f"{hreal_to_str(z.real, digits)} {hreal_to_str(z.imag, digits)}j"


# ---------------------------------------------------------------------------
# Bernoulli numbers as exact rationals (classic recurrence), cached immutably.
# Used by the Euler-Maclaurin machinery and by the limit-definition oracle.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_upto(n_max: int) -> tuple:
    B = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += Fraction(math.comb(m + 1, j)) * B[j]
        B.append(-acc / (m + 1))
    return tuple(B)


def bernoulli_fraction(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    block = ((n // 64) + 1) * 64
    return _bernoulli_upto(block)[n]
