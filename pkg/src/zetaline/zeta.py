"""Riemann zeta on vertical lines, its derivatives, and the Laurent data at s=1.

Everything here reduces to two workhorses:

* an Euler-Maclaurin evaluator for zeta(s), with the trapezoid cutoff chosen
  from the working precision and |Im s|, and Bernoulli corrections to matching
  order; and
* trapezoid contour extraction of Taylor coefficients of the entire function
  g(s) = zeta(s) - 1/(s-1) on the circle |s - 1| = 3, which yields the
  Stieltjes constants gamma_k = (-1)^k k! [g]_k and, applied to powers of
  (s-1) zeta(s), the coefficient family lambda_{m,k}.

The radius-3 circle reaches Re s = -2, left of the public evaluation region,
so the contour uses the raw Euler-Maclaurin path (valid far left of the strip
for the correction orders used here) while the public ``zeta_em`` keeps the
advertised Re s > -1 gate.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from mpmath import mp, mpc, mpf, workdps

from .precision import (
    PrecisionCtx,
    PrecisionUnachievableError,
    bernoulli_fraction,
    hreal_to_str,
)

__all__ = [
    "ZetaPoleError",
    "RegionError",
    "ContourError",
    "StieltjesMethod",
    "StieltjesTable",
    "LaurentTable",
    "zeta_em",
    "zeta_minus_pole",
    "zeta_derivative",
    "stieltjes",
    "stieltjes_limit_oracle",
    "laurent_power_coeffs",
    "berndt_bound_holds",
]


class ZetaPoleError(ZeroDivisionError):
    """Evaluation requested at the pole s = 1."""


class RegionError(ValueError):
    """Evaluation requested outside the implemented region Re s > -1."""


class ContourError(ArithmeticError):
    """A differentiation contour touches the pole or leaves the region."""


# ---------------------------------------------------------------------------
# Euler-Maclaurin evaluation
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _spf_table(n: int) -> tuple:
    """Smallest prime factor for 0..n (0 for indices 0, 1)."""
    spf = list(range(n + 1))
    for p in range(2, int(n ** 0.5) + 1):
        if spf[p] == p:
            for q in range(p * p, n + 1, p):
                if spf[q] == q:
                    spf[q] = p
    spf[0] = spf[1] = 0
    return tuple(spf)


def _em_orders(dps: int, sigma: float, t: float):
    """Correction order K and cutoff N for the target working digits.

    With N ~ 1.6 (|s| + 2K) the Bernoulli-term ratio is ~ 1/10 per order, so
    K ~ dps/2 orders reach 10**-dps.  Far right of the strip the N**(1-sigma)
    factor does the converging, so sigma is capped at 2K when sizing N.
    """
    K = max(10, int(0.58 * dps) + 2)
    sigma_eff = min(max(sigma, 0.0), 2.0 * K)
    abs_eff = math.hypot(sigma_eff, t)
    N = max(10, int(1.6 * (abs_eff + 2 * K)) + 1)
    return K, N


def _zeta_em_raw(s: mpc, dps: int, n_scale: int = 1) -> mpc:
    """Euler-Maclaurin zeta valid for Re s > 1 - 2K (far left of the strip).

    Must be called inside an mp context of at least ``dps`` digits.
    ``n_scale`` multiplies the trapezoid cutoff (self-consistency testing).
    """
    s = mpc(s)
    K, N = _em_orders(dps, float(s.real), float(s.imag))
    N *= n_scale
    # bucket N upward so the factor sieve is shared across nearby calls
    N = 1 << (N - 1).bit_length()
    spf = _spf_table(N)
    # multiplicative fill of n^{-s}: one complex exp per prime, one mul per composite
    vals = [None] * N
    vals[1] = mpc(1)
    total = mpc(1)
    for n in range(2, N):
        p = spf[n]
        if p == n:
            vals[n] = mp.exp(-s * mp.log(n))
        else:
            vals[n] = vals[p] * vals[n // p]
        total += vals[n]
    lnN = mp.log(N)
    Nms = mp.exp(-s * lnN)
    total += Nms * N / (s - 1)
    total += Nms / 2
    pw = Nms / N          # N^{-s-1}
    poch = s              # s (s+1) ... (s+2k-2), one factor so far
    Nsq = mpf(N) ** 2
    for k in range(1, K + 1):
        if k > 1:
            poch = poch * (s + 2 * k - 3) * (s + 2 * k - 2)
            pw = pw / Nsq
        b = bernoulli_fraction(2 * k)
        total += (mpf(b.numerator) / b.denominator) / mp.factorial(2 * k) * poch * pw
    return +total


def zeta_em(s, ctx: PrecisionCtx) -> mpc:
    """zeta(s) by Euler-Maclaurin summation, for Re s > -1, s != 1.

    Accurate to ctx.digits - 3 significant digits for |Im s| up to 1e6.
    Raises ZetaPoleError at s = 1 and RegionError for Re s <= -1.
    """
    with workdps(ctx.working()):
        s = mpc(s)
        if s == 1:
            raise ZetaPoleError("zeta has a simple pole at s = 1")
        if s.real <= -1:
            raise RegionError(f"zeta_em implements Re s > -1 only, got {s}")
        return _zeta_em_raw(s, ctx.working())


def zeta_minus_pole(s, ctx: PrecisionCtx) -> mpc:
    """The entire function zeta(s) - 1/(s-1), finite at s = 1.

    Near s = 1 the value comes from the Taylor series with Stieltjes
    coefficients; elsewhere it is direct evaluation.
    """
    with workdps(ctx.working()):
        s = mpc(s)
        if abs(s - 1) < mpf("0.05"):
            k_top = max(24, ctx.digits // 2 + 6)  # terms gain ~1.8 digits each
            table = stieltjes(k_top, PrecisionCtx(max(ctx.digits, 30)))
            u = s - 1
            acc = mpc(0)
            for k in range(k_top, -1, -1):
                term = table.gammas[k] * (-1) ** k / mp.factorial(k)
                acc = acc * u + term
            return +acc
        if s.real <= -1:
            raise RegionError(f"zeta_minus_pole implements Re s > -1 only, got {s}")
        return +(_zeta_em_raw(s, ctx.working()) - 1 / (s - 1))


# ---------------------------------------------------------------------------
# Contour Taylor extraction
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8)
def _circle_grid(m2: int, wp: int) -> tuple:
    """zeta evaluated at s_j = 1 + 3 exp(2 pi i j / m2), j = 0..m2-1.

    Conjugate symmetry halves the work; the grid at 2M nodes contains the
    M-node grid, so doubling-based error estimates reuse every evaluation.
    """
    with workdps(wp):
        half = m2 // 2
        evals = [None] * m2
        for j in range(half + 1):
            s = 1 + 3 * mp.expjpi(mpf(2 * j) / m2)
            evals[j] = _zeta_em_raw(s, wp)
        for j in range(half + 1, m2):
            evals[j] = mp.conj(evals[m2 - j])
        return tuple(evals)


@lru_cache(maxsize=8)
def _unit_roots(m2: int, wp: int) -> tuple:
    with workdps(wp):
        return tuple(mp.expjpi(mpf(2 * j) / m2) for j in range(m2))


def _extract_taylor(fvals: Sequence, m2: int, step: int, k_max: int, wp: int) -> list:
    """Trapezoid Taylor coefficients a_k = (1/(M R^k)) sum_j f_j w^{-jk}, R=3.

    ``fvals`` live on the 2M grid; ``step`` selects every step-th node.
    Conjugate-pair folding keeps the result exactly real-symmetric.
    """
    with workdps(wp):
        M = m2 // step
        roots = _unit_roots(m2, wp)
        R = mpf(3)
        out = []
        f_half = fvals[(M // 2) * step]  # node at angle pi (M is always even)
        for k in range(k_max + 1):
            acc = (fvals[0] + f_half if k % 2 == 0 else fvals[0] - f_half).real
            for j in range(1, M // 2):
                w = roots[(-j * k * step) % m2]
                acc += 2 * (fvals[j * step] * w).real
            out.append(acc / (M * R ** k))
        return out


def _stieltjes_nodes(k_max: int, wp: int) -> int:
    """Node count: aliasing (3/pi)^M below 10^-wp, floor max(64, 4 k_max)."""
    m_alias = int((wp + 5) * math.log(10) / math.log(math.pi / 3.0)) + 1
    M = max(64, 4 * k_max, m_alias)
    return M + (M % 2)


class StieltjesMethod(str, Enum):
    CONTOUR = "contour"
    LIMIT_ACCEL = "limit-accel"


@dataclass(frozen=True)
class StieltjesTable:
    """gamma_0 .. gamma_{k_max} with method and accuracy metadata."""

    k_max: int
    gammas: tuple
    method: StieltjesMethod
    digits: int
    est_errors: tuple = ()

    def __post_init__(self):
        g0 = self.gammas[0]
        if not (mpf("0.57") < g0 < mpf("0.58")):
            raise ValueError(f"gamma_0 = {g0} outside (0.57, 0.58)")
        for k in range(1, self.k_max + 1):
            if not berndt_bound_holds(self.gammas[k], k):
                raise ValueError(f"Berndt bound violated at k = {k}")

    def to_json(self) -> str:
        payload = {
            "schema_version": 1,
            "digits": self.digits,
            "method": self.method.value,
            "values": [
                {"k": k, "gamma": hreal_to_str(g, self.digits)}
                for k, g in enumerate(self.gammas)
            ],
        }
        return json.dumps(payload, indent=1)


def berndt_bound_holds(gamma_k, k: int) -> bool:
    """|gamma_k| / k! <= 4 / (k pi^k), for k >= 1."""
    with workdps(30):
        return abs(gamma_k) / mp.factorial(k) <= 4 / (k * mp.pi ** k)


@lru_cache(maxsize=32)
def _stieltjes_cached(k_max: int, digits: int) -> StieltjesTable:
    from . import cache as _cache

    wp = digits + max(10, int(math.ceil(0.05 * k_max)) + 10)
    if wp > 50_000:
        raise PrecisionUnachievableError(f"stieltjes working precision {wp} too large")
    key = f"stieltjes_k{k_max}_d{digits}"
    cached = _cache.load_values(key, digits)
    err_cached = _cache.load_values(key + "_err", digits) if cached else None
    if cached is not None and err_cached is not None and len(cached) == k_max + 1:
        return StieltjesTable(
            k_max=k_max,
            gammas=tuple(cached),
            method=StieltjesMethod.CONTOUR,
            digits=digits,
            est_errors=tuple(err_cached),
        )
    M = _stieltjes_nodes(k_max, wp)
    m2 = 2 * M
    grid = _circle_grid(m2, wp + 10)
    with workdps(wp + 10):
        gvals = tuple(g - 1 / (3 * mp.expjpi(mpf(2 * j) / m2)) for j, g in enumerate(grid))
        coarse = _extract_taylor(gvals, m2, 2, k_max, wp + 10)
        fine = _extract_taylor(gvals, m2, 1, k_max, wp + 10)
        gammas, errs = [], []
        for k in range(k_max + 1):
            gk = fine[k] * mp.factorial(k) * (-1) ** k
            gk_c = coarse[k] * mp.factorial(k) * (-1) ** k
            gammas.append(+gk)
            errs.append(+abs(gk - gk_c))
    table = StieltjesTable(
        k_max=k_max,
        gammas=tuple(gammas),
        method=StieltjesMethod.CONTOUR,
        digits=digits,
        est_errors=tuple(errs),
    )
    _cache.store_values(key, digits, table.gammas)
    _cache.store_values(key + "_err", digits, table.est_errors)
    return table


def stieltjes(k_max: int, ctx: PrecisionCtx) -> StieltjesTable:
    """Stieltjes constants gamma_0..gamma_{k_max} by contour extraction.

    Taylor coefficients of zeta(s) - 1/(s-1) are read off a trapezoid rule on
    |s - 1| = 3; node-count doubling supplies the per-constant error estimate
    (``est_errors``).  Working precision is widened by ceil(0.05 k_max) + 10
    digits to absorb the (pi/3)^k extraction loss.
    """
    if k_max > 400:
        raise PrecisionUnachievableError("stieltjes supports k_max <= 400")
    return _stieltjes_cached(k_max, ctx.digits)


def stieltjes_limit_oracle(k_max: int, ctx: PrecisionCtx, n_terms: int = 10_000):
    """Independent gamma_k oracle from the limit definition.

    gamma_k = lim ( sum_{m<=N} log^k m / m - log^{k+1} N / (k+1) ), summed to
    N = n_terms and corrected by the Euler-Maclaurin expansion of the tail:
    subtract log^k N / (2N) and the B_{2j} terms built from derivatives of
    log^k x / x (computed symbolically by the recurrence
    P_{r+1} = P_r' - (r+1) P_r on polynomials in log x).

    Suitable for k_max up to ~30; the asymptotic correction series degrades
    beyond that.  Fully independent of the contour route.
    """
    if k_max > 40:
        raise PrecisionUnachievableError("limit-definition oracle supports k_max <= 40")
    N = n_terms
    wp = ctx.digits + 15 + int(k_max * math.log10(math.log(N))) + 5
    J = 14
    with workdps(wp):
        lnN = mp.log(N)
        sums = [mpf(0)] * (k_max + 1)
        for m in range(1, N + 1):
            lg = mp.log(m)
            p = mpf(1) / m
            for k in range(k_max + 1):
                sums[k] += p
                p *= lg
        out = []
        for k in range(k_max + 1):
            v = sums[k] - lnN ** (k + 1) / (k + 1) - lnN ** k / (2 * N)
            P = [mpf(0)] * k + [mpf(1)]  # L^k, coefficients in L = log x
            r = 0
            for j in range(1, J + 1):
                while r < 2 * j - 1:
                    dP = [P[i + 1] * (i + 1) for i in range(len(P) - 1)] + [mpf(0)]
                    P = [dP[i] - (r + 1) * P[i] for i in range(len(P))]
                    r += 1
                val = mp.fsum(c * lnN ** i for i, c in enumerate(P) if c) / mpf(N) ** (r + 1)
                b = bernoulli_fraction(2 * j)
                v -= (mpf(b.numerator) / b.denominator) / mp.factorial(2 * j) * val
            out.append(+v)
    return out


# ---------------------------------------------------------------------------
# Derivatives and the lambda_{m,k} family
# ---------------------------------------------------------------------------

def zeta_derivative(s0, k: int, ctx: PrecisionCtx, radius=None, nodes: int | None = None) -> mpc:
    """k-th derivative of zeta at s0 by trapezoid contour differentiation.

    The circle |s - s0| = radius must exclude s = 1 and stay in Re s > -1;
    the default radius is half the headroom to both constraints.  Relative
    error <= 10**(5 - digits); working precision widens by k log10(1/radius)
    to absorb the radius**-k amplification.
    """
    if k == 0:
        return zeta_em(s0, ctx)
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    with workdps(ctx.working()):
        s0 = mpc(s0)
        headroom = min(abs(s0 - 1), s0.real + 1)
        if radius is None:
            radius = min(headroom / 2, mpf(2))
        radius = mpf(radius)
        if radius <= 0 or radius >= headroom:
            raise ContourError(
                f"contour of radius {radius} around {s0} hits the pole or leaves Re s > -1"
            )
    amp = int(k * math.log10(1.0 / float(radius))) + 1 if radius < 1 else 0
    wp = ctx.working() + amp + 10
    M = nodes or max(64, 8 * k)
    M += M % 2
    with workdps(wp):
        prev = None
        for _ in range(6):
            acc = mpc(0)
            for j in range(M):
                w = mp.expjpi(mpf(2 * j) / M)
                fv = _zeta_em_raw(s0 + radius * w, wp)
                acc += fv * mp.expjpi(mpf(-2 * j * k) / M)
            val = acc * mp.factorial(k) / (M * radius ** k)
            if prev is not None and abs(val - prev) <= mpf(10) ** (-(ctx.digits + 2)) * (1 + abs(val)):
                return +val
            prev = val
            M *= 2
        return +prev


@dataclass(frozen=True)
class LaurentTable:
    """lambda_{0,k} .. lambda_{m_max,k}: the expansion of (s-1)^k zeta^k near 1.

    Entries satisfy lambda_{0,k} = 1 and, for k = 1,
    lambda_{m,1}/m! = (-1)**(m-1) gamma_{m-1}/(m-1)!.
    """

    k: int
    m_max: int
    lambdas: tuple
    digits: int

    def __post_init__(self):
        with workdps(30):
            if abs(self.lambdas[0] - 1) > mpf(10) ** (-(self.digits - 10)):
                raise ValueError(f"lambda_(0,{self.k}) = {self.lambdas[0]} != 1")

    def coeff(self, m: int):
        """lambda_{m,k} / m! (the raw Taylor coefficient)."""
        with workdps(self.digits + 10):
            return self.lambdas[m] / mp.factorial(m)


@lru_cache(maxsize=32)
def _laurent_cached(k: int, m_max: int, digits: int) -> LaurentTable:
    from . import cache as _cache

    key = f"laurent_p{k}_m{m_max}_d{digits}"
    cached = _cache.load_values(key, digits)
    if cached is not None and len(cached) == m_max + 1:
        return LaurentTable(k=k, m_max=m_max, lambdas=tuple(cached), digits=digits)
    wp = digits + max(10, int(math.ceil(0.05 * m_max)) + 10) + 2 * k
    M = _stieltjes_nodes(m_max, wp)
    m2 = 2 * M
    grid = _circle_grid(m2, wp + 10)
    with workdps(wp + 10):
        fvals = []
        for j, zv in enumerate(grid):
            u = 3 * mp.expjpi(mpf(2 * j) / m2)  # s - 1 on the circle
            fvals.append((u * zv) ** k)
        coeffs = _extract_taylor(tuple(fvals), m2, 1, m_max, wp + 10)
        lambdas = tuple(+(c * mp.factorial(m)) for m, c in enumerate(coeffs))
    table = LaurentTable(k=k, m_max=m_max, lambdas=lambdas, digits=digits)
    _cache.store_values(key, digits, table.lambdas)
    return table


def laurent_power_coeffs(k: int, m_max: int, ctx: PrecisionCtx) -> LaurentTable:
    """Taylor data of (s-1)^k zeta(s)^k at s = 1 by the same contour method."""
    if k < 1:
        raise ValueError("power k must be >= 1")
    return _laurent_cached(k, m_max, ctx.digits)
