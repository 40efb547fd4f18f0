"""zeta(s) from its half-plane coefficient series vs Euler-Maclaurin.

The series zeta(s) = s/(s-1) + sum ell_n ((1-s)/s)^n converges geometrically
at ratio |(1-s)/s|; near the critical line the evaluator switches to the
closed disk form and says so.
"""

from mpmath import mp, mpc, mpf, workdps

from zetaline import PrecisionCtx, coeffs_critical, stieltjes, zeta_em, zeta_via_series

ctx = PrecisionCtx(66)
coeffs = coeffs_critical(150, stieltjes(160, PrecisionCtx(83)), PrecisionCtx(83))

grid = [mpf(2), mpf("0.75"), mpc("0.6", "1"), mpc("1.5", "10"), mpc("0.6", "50")]
print(f"{'s':>14} | {'route':<11} | |series - euler-maclaurin|")
print("-" * 55)
with workdps(40):
    for s in grid:
        v, info = zeta_via_series(s, coeffs, mpf("1e-8"), ctx, return_info=True)
        ref = zeta_em(s, ctx)
        print(f"{mp.nstr(s, 6):>14} | {info.route:<11} | {mp.nstr(abs(v - ref), 3)}")
print("\nNear the boundary |(1-s)/s| -> 1 the direct sum would need ~1/(1-r)")
print("terms, so the evaluator reports route='closed-form' there instead.")
