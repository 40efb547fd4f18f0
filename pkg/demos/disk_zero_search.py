"""Zero search for the partial-sum polynomials inside the unit disk.

A disk zero of the full series would map to a zeta zero right of the
critical line, so the interesting outcome is the certified absence.
"""

from mpmath import mpf

from zetaline import PrecisionCtx, coeffs_critical, roots_fN, stieltjes, tail_radius_certificate

ctx = PrecisionCtx(95)
coeffs = coeffs_critical(220, stieltjes(230, ctx), ctx)

for N in (50, 120, 200):
    report = roots_fN(N, coeffs, ctx, probe_radii=(0.5, 0.8, 0.9))
    mods = sorted(abs(z) for z in report.all_roots)
    print(f"degree {N + 1}: winding counts {dict(report.winding_counts)}, "
          f"roots inside disk: {len(report.roots_in_disk)}, "
          f"closest root modulus {float(mods[0]):.4f}")

cert = tail_radius_certificate(100, mpf("0.5"), coeffs)
print(f"\nRouche certificate at radius 0.5 (N=100):")
print(f"  tail bound        {float(cert.tail_bound):.2e}")
print(f"  min |f_N| on circle {float(cert.min_fN_on_circle):.4f}")
print(f"  conclusive: {cert.conclusive} -> the full series has no zero with |z| <= 0.5,")
print(f"  so zeta has no zero s with |(1-s)/s| <= 0.5 up to the stated residuals.")

cert99 = tail_radius_certificate(100, mpf("0.99"), coeffs)
print(f"\nSame certificate at radius 0.99: conclusive = {cert99.conclusive}")
print("  (the tail bound blows up near the boundary; inconclusive is reported, not raised)")
