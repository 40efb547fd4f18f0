"""Zeros of the partial-sum polynomials f_N inside the unit disk.

f_N(z) = -1 + sum_{n=0}^{N} ell_n z^{n+1} truncates the full series
f(z) = z h(z) - 1 = z zeta(1/(1+z)), whose disk zeros correspond exactly to
zeta zeros in the half-plane Re s > 1/2.  Hardware companion-matrix
eigenvalues seed an Aberth-Ehrlich simultaneous polish at full precision;
winding counts on probe circles give an independent argument-principle count,
and the Cauchy-Schwarz tail bound turns "f_N has no zeros inside radius r"
into a Rouche certificate that the full series has none either.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np
from mpmath import mp, mpc, mpf, workdps

from .coefficients import CoeffTable
from .precision import PrecisionCtx, hreal_to_str
from .series import partial_sum_fN

__all__ = [
    "RootReport",
    "CircleTooCloseError",
    "roots_fN",
    "winding_count",
    "tail_radius_certificate",
    "TailCertificate",
]


class CircleTooCloseError(ArithmeticError):
    """A probe circle passes too close to a root for a reliable count."""


@dataclass(frozen=True)
class RootReport:
    N: int
    roots_in_disk: tuple
    min_modulus: Optional[mpf]
    winding_counts: tuple          # ((radius, count), ...)
    residual_max: float
    all_roots: tuple = ()
    polished: bool = True

    def to_json(self) -> str:
        payload = {
            "schema_version": 1,
            "N": self.N,
            "polished": self.polished,
            "residual_max": f"{self.residual_max:.3e}",
            "min_modulus": None if self.min_modulus is None else hreal_to_str(self.min_modulus, 20),
            "winding_counts": [[float(r), c] for r, c in self.winding_counts],
            "roots_in_disk": [
                [hreal_to_str(z.real, 20), hreal_to_str(z.imag, 20)]
                for z in self.roots_in_disk
            ],
        }
        return json.dumps(payload, indent=1)

    def to_csv(self) -> str:
        lines = ["re,im,modulus"]
        for z in self.all_roots:
            lines.append(f"{float(z.real)!r},{float(z.imag)!r},{float(abs(z))!r}")
        return "\n".join(lines) + "\n"


def _poly_coeffs_ascending(N: int, coeffs: CoeffTable):
    """[-1, ell_0, ..., ell_N]: f_N coefficients by ascending power."""
    return [mpf(-1)] + [coeffs.value(n) for n in range(N + 1)]


def _float_roots(c_asc) -> np.ndarray:
    c = np.array([float(x) for x in c_asc])
    return np.roots(c[::-1])


def _aberth_polish(c_asc, approx: np.ndarray, wp: int, iters: int = 12, tol_exp: int = 30):
    """Aberth-Ehrlich simultaneous refinement of all roots at wp digits."""
    deg = len(c_asc) - 1
    with workdps(wp):
        zs = [mpc(complex(z)) for z in approx]
        coeff = [mpc(x) for x in c_asc]

        def p_and_dp(z):
            p = mpc(0)
            dp = mpc(0)
            for a in reversed(coeff):
                dp = dp * z + p
                p = p * z + a
            return p, dp

        tol = mpf(10) ** (-tol_exp)
        for _ in range(iters):
            moved = mpf(0)
            new = []
            for i, z in enumerate(zs):
                p, dp = p_and_dp(z)
                if dp == 0:
                    new.append(z)
                    continue
                ratio = p / dp
                corr = mpc(0)
                for j, w in enumerate(zs):
                    if j != i:
                        corr += 1 / (z - w)
                dz = ratio / (1 - ratio * corr)
                new.append(z - dz)
                moved = max(moved, abs(dz))
            zs = new
            if moved < tol:
                break
        residuals = [abs(p_and_dp(z)[0]) for z in zs]
        return zs, residuals, moved < tol


def roots_fN(N: int, coeffs: CoeffTable, ctx: PrecisionCtx,
             probe_radii=(0.5, 0.8, 0.9)) -> RootReport:
    """All roots of f_N: companion-matrix seed, Aberth-Ehrlich polish.

    Roots with |z| < 1 are listed separately; winding counts at the probe
    radii come from :func:`winding_count` and must agree with the root tally.
    """
    if N > 400:
        raise ValueError("degree cap 400 (precision reserve dominates beyond)")
    if N > coeffs.n_max:
        raise ValueError(f"N={N} exceeds coefficient table n_max={coeffs.n_max}")
    c_asc = _poly_coeffs_ascending(N, coeffs)
    seeds = _float_roots(c_asc)
    wp = max(ctx.digits, 40) + 15
    zs, residuals, converged = _aberth_polish(c_asc, seeds, wp, tol_exp=ctx.digits // 2 + 10)
    with workdps(wp):
        inside = [(z, r) for z, r in zip(zs, residuals) if abs(z) < 1]
        inside.sort(key=lambda p: abs(p[0]))
        min_mod = +abs(inside[0][0]) if inside else None
        res_max = max((float(r) for _, r in inside), default=0.0)
    counts = []
    for rho in probe_radii:
        try:
            counts.append((rho, winding_count(N, rho, 4096, coeffs)))
        except CircleTooCloseError:
            counts.append((rho, -1))
    return RootReport(
        N=N,
        roots_in_disk=tuple(z for z, _ in inside),
        min_modulus=min_mod,
        winding_counts=tuple(counts),
        residual_max=res_max,
        all_roots=tuple(zs),
        polished=converged,
    )


def winding_count(N: int, radius: float, nodes: int, coeffs: CoeffTable,
                  max_refine: int = 8) -> int:
    """Argument-principle count of f_N zeros inside |z| = radius.

    Accumulates the phase of f_N along the circle, refining until every
    phase step is below pi/2.  Raises CircleTooCloseError when the minimum
    |f_N| on the circle suggests a root within ~10 node spacings.
    """
    if radius <= 0 or radius >= 1.0000001:
        raise ValueError("radius must lie in (0, 1]")
    c = np.array([float(coeffs.value(n)) for n in range(N + 1)])
    poly = np.concatenate([[-1.0], c])  # ascending

    def fvals(m):
        th = np.linspace(0.0, 2 * np.pi, m, endpoint=False)
        z = radius * np.exp(1j * th)
        acc = np.zeros(m, dtype=complex)
        for a in poly[::-1]:
            acc = acc * z + a
        return acc

    m = max(nodes, 64)
    for _ in range(max_refine):
        v = fvals(m)
        spacing = 2 * np.pi * radius / m
        # derivative scale estimate from consecutive differences
        dscale = np.abs(np.diff(np.concatenate([v, v[:1]]))).max() / spacing
        if np.abs(v).min() < 10 * spacing * max(dscale, 1e-30):
            # a root is (or may be) within ~10 node spacings of the circle
            if m < nodes * 2 ** (max_refine - 1):
                m *= 2
                continue
            raise CircleTooCloseError(
                f"min |f_N| = {np.abs(v).min():.3e} on |z|={radius} with spacing {spacing:.3e}"
            )
        steps = np.angle(np.roll(v, -1) / v)
        if np.abs(steps).max() < np.pi / 2:
            total = steps.sum()
            return int(round(total / (2 * np.pi)))
        m *= 2
    raise CircleTooCloseError(f"phase steps never settled on |z|={radius}")


@dataclass(frozen=True)
class TailCertificate:
    N: int
    radius: float
    tail_bound: mpf
    min_fN_on_circle: mpf
    conclusive: bool

    @property
    def certified_zero_count_matches(self) -> bool:
        return self.conclusive


def tail_radius_certificate(N: int, radius, coeffs: CoeffTable,
                            scan_nodes: int = 8192) -> TailCertificate:
    """Rouche certificate radius: if the series tail bound

        |f - f_N| <= sqrt(sum_{n>N} ell_n^2) |z|^{N+2} / sqrt(1-|z|)

    stays below min |f_N| on |z| = radius, the full series has exactly as
    many zeros inside as f_N does.  An inconclusive comparison is reported,
    never raised.
    """
    with workdps(coeffs.digits):
        r = mpf(radius)
        if not 0 < r < 1:
            raise ValueError("radius must lie in (0, 1)")
        from .series import tail_sq_after

        bound = mp.sqrt(tail_sq_after(coeffs, N)) * r ** (N + 2) / mp.sqrt(1 - r)
    # minimum over a dense circle scan (float precision, then mp confirm)
    c = np.array([float(coeffs.value(n)) for n in range(N + 1)])
    poly = np.concatenate([[-1.0], c])
    th = np.linspace(0.0, 2 * np.pi, scan_nodes, endpoint=False)
    z = float(r) * np.exp(1j * th)
    acc = np.zeros(scan_nodes, dtype=complex)
    for a in poly[::-1]:
        acc = acc * z + a
    i0 = int(np.abs(acc).argmin())
    with workdps(coeffs.digits):
        zmp = mpc(z[i0])
        fmin = abs(partial_sum_fN(N, zmp, coeffs))
        # float scan resolution guard: drop the estimate by the local slope
        slope = float(abs(np.diff(np.abs(acc))).max() / (2 * np.pi * float(r) / scan_nodes))
        fmin_safe = fmin - mpf(slope) * 2 * mp.pi * r / scan_nodes * 2
        return TailCertificate(
            N=N,
            radius=float(r),
            tail_bound=+bound,
            min_fN_on_circle=+fmin,
            conclusive=bool(fmin_safe > bound),
        )
