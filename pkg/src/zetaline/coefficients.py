"""Coefficient families of zeta against the Cauchy-measure Fourier basis.

Three families, all ultimately built from exact binomials and the Stieltjes /
Laurent tables of :mod:`zetaline.zeta`:

* ``critical``: the boundary family for the line Re s = 1/2.  Entry -1 is
  exactly -1, entry 0 is gamma_0 - 1, and for n >= 1

      ell_n = (-1)**n sum_{k=1}^{n} C(n-1, k-1) (-1)**k gamma_k / k!

* ``line(sigma0)``: the family for Re s = sigma0 > 1/2, sigma0 != 1.  For
  1/2 < sigma0 < 1 the positive-index entries are binomial sums of the Taylor
  coefficients of zeta(s) - 1/(s-1) at sigma0 + 1/2 (algebraically identical
  to the k-th-derivative form with its pole correction, but free of the
  cancellation between the two), the negative indices follow the closed
  geometric form from the pole at 3/2 - sigma0, and entry 0 is
  zeta(sigma0+1/2) - 1/(sigma0-1/2) - 1/(3/2-sigma0).  For sigma0 > 1 there
  is no pole correction and the negative indices vanish.

* ``power(k)``: the family for zeta**k on the critical line, from the
  lambda_{m,k} table; zero for n < -k.

The positive-index binomial sums cancel catastrophically: terms reach about
1.3183**n while the results shrink, so construction demands the documented
precision reserve digits >= 60 + ceil(0.15 n_max).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from mpmath import mp, mpc, mpf, workdps

from .precision import PrecisionCtx, binom_exact, hreal_to_str
from .zeta import (
    LaurentTable,
    StieltjesTable,
    stieltjes,
    zeta_derivative,
    zeta_em,
    zeta_minus_pole,
)

__all__ = [
    "CoeffTable",
    "InsufficientPrecisionError",
    "InsufficientTableError",
    "coeffs_critical",
    "coeffs_line",
    "coeffs_power",
    "binom_transform",
    "binom_inverse",
    "decay_diagnostics",
    "DecayDiagnostics",
    "PARSEVAL_SQ_CEILING",
]

#: Decimal value of log(2 pi) - gamma_0 - 1, the Parseval ceiling for
#: sum_{n>=0} ell_n^2 (used as an upper-bound invariant, 40 digits).
PARSEVAL_SQ_CEILING = "0.2606614015275682079371868661220003514700"


class InsufficientPrecisionError(ArithmeticError):
    """ctx violates the cancellation reserve digits >= 60 + 0.15 n_max."""


class InsufficientTableError(ValueError):
    """The supplied Stieltjes/Laurent table is too short for the request."""


@dataclass(frozen=True)
class CoeffTable:
    """Coefficients indexed n_min..n_max for one family.

    Entries are accurate to at least ``digits - ceil(0.15 n_max)`` decimal
    digits (>= 60 by the construction precondition).
    """

    family: str                      # "critical" | "line" | "power"
    n_min: int
    n_max: int
    values: tuple
    digits: int
    provenance: str = "formula"      # "formula" | "quadrature"
    sigma0: Optional[mpf] = None     # family == "line"
    k: Optional[int] = None          # family == "power"

    def __post_init__(self):
        if self.family not in ("critical", "line", "power"):
            raise ValueError(f"unknown family {self.family!r}")
        if len(self.values) != self.n_max - self.n_min + 1:
            raise ValueError("values length does not match index range")

    def value(self, n: int):
        if not (self.n_min <= n <= self.n_max):
            if self.family == "power" and n < -self.k:
                return mpf(0)
            raise IndexError(f"coefficient index {n} outside [{self.n_min}, {self.n_max}]")
        return self.values[n - self.n_min]

    def positive_slice(self) -> tuple:
        """Entries for n = 0..n_max (the power-series coefficients)."""
        return self.values[-self.n_min:] if self.n_min < 0 else self.values

    def to_json(self) -> str:
        payload = {
            "schema_version": 1,
            "family": self.family,
            "digits": self.digits,
            "provenance": self.provenance,
            "values": [
                {"n": n, "value": hreal_to_str(self.value(n), self.digits)}
                for n in range(self.n_min, self.n_max + 1)
            ],
        }
        if self.sigma0 is not None:
            payload["sigma0"] = hreal_to_str(self.sigma0, self.digits)
        if self.k is not None:
            payload["k"] = self.k
        return json.dumps(payload, indent=1)

    def to_csv(self) -> str:
        lines = ["n,value"]
        for n in range(self.n_min, self.n_max + 1):
            lines.append(f"{n},{hreal_to_str(self.value(n), self.digits)}")
        return "\n".join(lines) + "\n"


def _reserve_check(n_max: int, ctx: PrecisionCtx):
    need = 60 + math.ceil(0.15 * n_max)
    if ctx.digits < need:
        raise InsufficientPrecisionError(
            f"n_max={n_max} requires digits >= {need} (cancellation reserve), got {ctx.digits}"
        )


def coeffs_critical(n_max: int, gammas: StieltjesTable, ctx: PrecisionCtx) -> CoeffTable:
    """The critical-line family for n = -1..n_max."""
    _reserve_check(n_max, ctx)
    if gammas.k_max < n_max:
        raise InsufficientTableError(f"need gamma_k through k={n_max}, table has {gammas.k_max}")
    wp = ctx.working(15)
    with workdps(wp):
        a = [gammas.gammas[k] * (-1) ** k / mp.factorial(k) for k in range(n_max + 1)]
        vals = [mpf(-1), a[0] - 1]
        for n in range(1, n_max + 1):
            acc = mpf(0)
            for k in range(1, n + 1):
                acc += binom_exact(n - 1, k - 1) * a[k]
            vals.append(+(acc * (-1) ** n))
    return CoeffTable(
        family="critical", n_min=-1, n_max=n_max, values=tuple(vals), digits=ctx.digits
    )


def _line_taylor_coeffs(sigma0, k_top: int, gammas: StieltjesTable, ctx: PrecisionCtx) -> list:
    """Taylor coefficients c_k of zeta(s) - 1/(s-1) at s = sigma0 + 1/2.

    c_k = sum_{j>=k} C(j,k) (-1)^j gamma_j / j! (sigma0 - 1/2)^{j-k}; the
    Berndt bound makes the series geometric with ratio (sigma0 - 1/2)/pi.
    """
    wp = ctx.working(15)
    with workdps(wp):
        x = mpf(sigma0) - mpf("0.5")
        ratio = float(x / mp.pi)
        if ratio >= 0.9:
            raise InsufficientTableError(
                f"gamma-series for derivatives diverges too slowly at sigma0={sigma0}"
            )
        j_need = k_top + int((ctx.digits + 10) * math.log(10) / -math.log(ratio)) + 2
        if gammas.k_max < j_need:
            raise InsufficientTableError(
                f"line family at sigma0={sigma0} needs gamma table k_max >= {j_need}, "
                f"got {gammas.k_max}"
            )
        a = [gammas.gammas[j] * (-1) ** j / mp.factorial(j) for j in range(j_need + 1)]
        cs = []
        for k in range(k_top + 1):
            acc = mpf(0)
            pw = mpf(1)
            for j in range(k, j_need + 1):
                acc += binom_exact(j, k) * a[j] * pw
                pw *= x
            cs.append(+acc)
        return cs


def coeffs_line(
    sigma0,
    n_min: int,
    n_max: int,
    gammas: StieltjesTable,
    ctx: PrecisionCtx,
) -> CoeffTable:
    """The family for the vertical line Re s = sigma0 (sigma0 > 1/2, != 1)."""
    with workdps(ctx.working()):
        sigma0 = mpf(sigma0)
    if sigma0 <= mpf("0.5"):
        raise ValueError("sigma0 must exceed 1/2; the critical family handles sigma0 = 1/2")
    if sigma0 == 1:
        raise ValueError("sigma0 = 1 excluded: t -> zeta(1+it) is not square-integrable")
    if n_max >= 1:
        _reserve_check(n_max, ctx)
    wp = ctx.working(15)
    with workdps(wp):
        half = mpf("0.5")
        x = sigma0 - half
        cs = _line_taylor_coeffs(sigma0, max(n_max, 0), gammas, ctx) if n_max >= 1 else []
        vals = []
        for n in range(n_min, min(n_max, -1) + 1):
            if sigma0 > 1:
                vals.append(mpf(0))
            else:
                sign = 1 if n % 2 == 0 else -1
                vals.append(+(sign / x ** 2 * ((sigma0 - mpf("1.5")) / x) ** (n - 1)))
        if n_min <= 0 <= n_max:
            z_val = zeta_em(sigma0 + half, ctx)
            if sigma0 > 1:
                vals.append(+z_val.real)
            else:
                vals.append(+(z_val.real - 1 / x - 1 / (mpf("1.5") - sigma0)))
        for n in range(max(n_min, 1), n_max + 1):
            acc = mpf(0)
            for k in range(1, n + 1):
                term = cs[k]
                if sigma0 > 1:
                    term = term + (-1) ** k / x ** (k + 1)
                acc += binom_exact(n - 1, k - 1) * term
            vals.append(+(acc * (-1) ** n))
    return CoeffTable(
        family="line",
        n_min=n_min,
        n_max=n_max,
        values=tuple(vals),
        digits=ctx.digits,
        sigma0=sigma0,
    )


def line_coeff_via_derivatives(sigma0, n: int, ctx: PrecisionCtx) -> mpf:
    """Positive-index line coefficient by direct contour derivatives of zeta.

    The textbook route: (-1)^n sum_k C(n-1,k-1) (zeta^(k)(sigma0+1/2)/k! -
    (-1)^k/(sigma0-1/2)^{k+1}).  Slower and cancellation-prone; kept as the
    independent cross-check of the gamma-series route.
    """
    if n < 1:
        raise ValueError("derivative route is for n >= 1")
    wp = ctx.working(15)
    with workdps(wp):
        sigma0 = mpf(sigma0)
        half = mpf("0.5")
        x = sigma0 - half
        acc = mpf(0)
        for k in range(1, n + 1):
            dk = zeta_derivative(sigma0 + half, k, PrecisionCtx(ctx.digits + 2 * n))
            term = dk.real / mp.factorial(k)
            if sigma0 < 1:
                term -= (-1) ** k / x ** (k + 1)
            acc += binom_exact(n - 1, k - 1) * term
        return +(acc * (-1) ** n)


def coeffs_power(
    k: int,
    n_min: int,
    n_max: int,
    lambdas: LaurentTable,
    ctx: PrecisionCtx,
) -> CoeffTable:
    """The family for zeta**k on the critical line, from Laurent data.

    For n >= 1:      (-1)^n sum_{j=1}^{n} C(n-1,j-1) lambda_{j+k,k}/(j+k)!
    For -k <= n <= 0: (-1)^k sum_{j=0}^{k+n} C(k-j,-n) (-1)^j lambda_{j,k}/j!
    For n < -k: exactly 0.
    """
    if lambdas.k != k:
        raise InsufficientTableError(f"Laurent table is for power {lambdas.k}, not {k}")
    if n_max >= 1:
        _reserve_check(n_max, ctx)
    if lambdas.m_max < n_max + k:
        raise InsufficientTableError(
            f"need lambda_(m,{k}) through m={n_max + k}, table has {lambdas.m_max}"
        )
    wp = ctx.working(15)
    with workdps(wp):
        lam = [lambdas.lambdas[m] / mp.factorial(m) for m in range(lambdas.m_max + 1)]
        vals = []
        for n in range(n_min, min(n_max, 0) + 1):
            if n < -k:
                vals.append(mpf(0))
                continue
            acc = mpf(0)
            for j in range(0, k + n + 1):
                acc += binom_exact(k - j, -n) * (-1) ** j * lam[j]
            vals.append(+(acc * (-1) ** k))
        for n in range(max(n_min, 1), n_max + 1):
            acc = mpf(0)
            for j in range(1, n + 1):
                acc += binom_exact(n - 1, j - 1) * lam[j + k]
            vals.append(+(acc * (-1) ** n))
    return CoeffTable(
        family="power", n_min=n_min, n_max=n_max, values=tuple(vals),
        digits=ctx.digits, k=k,
    )


# ---------------------------------------------------------------------------
# Binomial transform
# ---------------------------------------------------------------------------

def binom_transform(a: Sequence) -> list:
    """b_n = sum_k C(n,k) (-1)^{n-k} a_k, with exact binomials."""
    return [
        sum(binom_exact(n, k) * (-1) ** (n - k) * a[k] for k in range(n + 1))
        for n in range(len(a))
    ]


def binom_inverse(b: Sequence) -> list:
    """a_n = sum_k C(n,k) b_k: inverse of :func:`binom_transform`."""
    return [
        sum(binom_exact(n, k) * b[k] for k in range(n + 1))
        for n in range(len(b))
    ]


# ---------------------------------------------------------------------------
# Decay diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecayDiagnostics:
    """Qualitative decay report: no pass/fail semantics attached.

    alpha_fit is the least-squares exponent of |coeff_n| ~ n**-alpha over the
    top half of the index range; the running sums feed the divergence and
    Parseval diagnostics.
    """

    alpha_fit: float
    abs_partial_sums: tuple
    sq_partial_sums: tuple
    n_start: int = 0


def decay_diagnostics(table: CoeffTable) -> DecayDiagnostics:
    if table.n_max < 50:
        raise ValueError("decay diagnostics need n_max >= 50")
    with workdps(table.digits + 10):
        pos = table.positive_slice()
        abs_s, sq_s = [], []
        acc_a, acc_q = mpf(0), mpf(0)
        for v in pos:
            acc_a += abs(v)
            acc_q += v * v if not isinstance(v, mpc) else abs(v) ** 2
            abs_s.append(+acc_a)
            sq_s.append(+acc_q)
        lo = max(1, table.n_max // 2)
        xs = [math.log(n) for n in range(lo, table.n_max + 1)]
        ys = [float(mp.log(abs(pos[n]))) for n in range(lo, table.n_max + 1)]
        n = len(xs)
        sx, sy = sum(xs), sum(ys)
        sxx = sum(x * x for x in xs)
        sxy = sum(x * y for x, y in zip(xs, ys))
        slope = (n * sxy - sx * sy) / (n * sxx - sx * sx)
    return DecayDiagnostics(
        alpha_fit=-slope,
        abs_partial_sums=tuple(abs_s),
        sq_partial_sums=tuple(sq_s),
    )
