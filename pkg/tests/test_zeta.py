import pytest
from mpmath import mp, mpc, mpf, workdps

from zetaline.precision import PrecisionCtx
from zetaline.zeta import (
    LaurentTable,
    RegionError,
    ZetaPoleError,
    _zeta_em_raw,
    berndt_bound_holds,
    laurent_power_coeffs,
    stieltjes,
    stieltjes_limit_oracle,
    zeta_derivative,
    zeta_em,
    zeta_minus_pole,
)

CTX = PrecisionCtx(50)

# frozen via the limit-definition oracle (test_oracle_agreement recomputes live)
GAMMA0 = "0.57721566490153286060651209008240243104215933593992"
GAMMA1 = "-0.072815845483676724860586375874901319137736338334"


def bracket_zeta2():
    """Independent oracle for zeta(2): direct series plus integral tail bracket."""
    with workdps(40):
        N = 20_000
        s = mp.fsum(mpf(1) / (n * n) for n in range(1, N + 1))
        return s + mpf(1) / (N + 1), s + mpf(1) / N


def eta_oracle_half():
    """zeta(1/2) through the alternating series with iterated averaging.

    eta(s) = (1 - 2^{1-s}) zeta(s); the Euler-transform style repeated
    averaging of partial sums converges geometrically.
    """
    with workdps(45):
        M = 220
        terms = [(-1) ** (n - 1) / mp.sqrt(n) for n in range(1, M + 1)]
        partial = []
        acc = mpf(0)
        for t in terms:
            acc += t
            partial.append(acc)
        for _ in range(M - 1):
            partial = [(partial[i] + partial[i + 1]) / 2 for i in range(len(partial) - 1)]
        eta = partial[0]
        return eta / (1 - 2 ** (mpf(1) - mpf("0.5")))


def test_zeta2_against_series_bracket():
    lo, hi = bracket_zeta2()
    v = zeta_em(2, CTX).real
    assert lo < v < hi
    with workdps(60):
        assert abs(v - mp.pi ** 2 / 6) < mpf(10) ** (-(CTX.digits - 3))


def test_zeta_half_against_eta_acceleration():
    v = zeta_em(mpf("0.5"), CTX).real
    ref = eta_oracle_half()
    with workdps(45):
        assert abs(v - ref) < mpf("1e-30")


def test_pole_and_region_errors():
    with pytest.raises(ZetaPoleError):
        zeta_em(1, CTX)
    with pytest.raises(RegionError):
        zeta_em(mpc(-1.5, 3), CTX)


def test_em_cutoff_doubling_invariance():
    ctx = PrecisionCtx(30)
    wp = ctx.working()
    for sig in ("0.5", "0.75", "2"):
        for tt in ("0", "14.1", "100"):
            s = mpc(mpf(sig), mpf(tt))
            with workdps(wp):
                a = _zeta_em_raw(s, wp, n_scale=1)
                b = _zeta_em_raw(s, wp, n_scale=2)
                assert abs(a - b) < mpf(10) ** (-ctx.digits + 4)


def test_zeta_minus_pole_is_regular_at_one():
    ctx = PrecisionCtx(40)
    with workdps(60):
        v = zeta_minus_pole(mpc(1) + mpf("1e-25"), ctx)
        assert abs(v - mpf(GAMMA0)) < mpf("1e-24")


def test_derivative_against_finite_differences():
    ctx = PrecisionCtx(30)
    d = zeta_derivative(2, 1, ctx)
    with workdps(80):
        h = mpf("1e-15")
        fd = (_zeta_em_raw(mpc(2) + h, 80) - _zeta_em_raw(mpc(2) - h, 80)) / (2 * h)
        assert abs(d - fd) < mpf("1e-25")


def test_derivative_order_zero_passthrough():
    ctx = PrecisionCtx(30)
    assert zeta_derivative(2, 0, ctx) == zeta_em(2, ctx)


def test_second_derivative_radius_consistency():
    ctx = PrecisionCtx(30)
    a = zeta_derivative(mpf("1.25"), 2, ctx, radius=mpf("0.1"))
    b = zeta_derivative(mpf("1.25"), 2, ctx, radius=mpf("0.2"))
    with workdps(40):
        assert abs(a - b) < mpf(10) ** (-ctx.digits + 6)


def test_stieltjes_frozen_values_and_oracle_agreement():
    table = stieltjes(20, CTX)
    with workdps(70):
        assert abs(table.gammas[0] - mpf(GAMMA0)) < mpf("1e-45")
        assert abs(table.gammas[1] - mpf(GAMMA1)) < mpf("1e-44")
    oracle = stieltjes_limit_oracle(20, CTX)
    with workdps(70):
        for k in range(21):
            assert abs(table.gammas[k] - oracle[k]) < mpf(10) ** (-(CTX.digits - 8))


def test_berndt_bound_all_k():
    table = stieltjes(100, CTX)
    for k in range(1, 101):
        assert berndt_bound_holds(table.gammas[k], k)


def test_stieltjes_table_serializes():
    table = stieltjes(5, PrecisionCtx(30))
    payload = table.to_json()
    assert '"schema_version"' in payload and '"gamma"' in payload


def test_laurent_k1_matches_gamma_closed_form():
    ctx = PrecisionCtx(40)
    lam = laurent_power_coeffs(1, 30, ctx)
    gam = stieltjes(30, ctx)
    with workdps(60):
        assert abs(lam.lambdas[0] - 1) < mpf("1e-35")
        assert abs(lam.lambdas[1] - gam.gammas[0]) < mpf("1e-33")
        assert abs(lam.lambdas[2] + 2 * gam.gammas[1]) < mpf("1e-33")
        for m in range(1, 31):
            closed = (-1) ** (m - 1) * gam.gammas[m - 1] / mp.factorial(m - 1)
            assert abs(lam.lambdas[m] / mp.factorial(m) - closed) < mpf(10) ** (-(ctx.digits - 8))


def test_laurent_k2_against_series_square_oracle():
    """lambda_{m,2}/m! must equal the self-convolution of the k=1 coefficients."""
    ctx = PrecisionCtx(40)
    lam2 = laurent_power_coeffs(2, 12, ctx)
    gam = stieltjes(14, ctx)
    with workdps(60):
        u = [mpf(1)] + [
            (-1) ** (m - 1) * gam.gammas[m - 1] / mp.factorial(m - 1) for m in range(1, 13)
        ]
        for m in range(13):
            conv = mp.fsum(u[j] * u[m - j] for j in range(m + 1))
            assert abs(lam2.lambdas[m] / mp.factorial(m) - conv) < mpf(10) ** (-(ctx.digits - 8))


def test_laurent_leading_is_one_for_k3():
    lam = laurent_power_coeffs(3, 6, PrecisionCtx(30))
    with workdps(40):
        assert abs(lam.lambdas[0] - 1) < mpf("1e-24")
