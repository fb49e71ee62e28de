"""Whole-package behavior gates.

One test per guaranteed behavior, pinned to explicit tolerances and, where
stated, wall-clock budgets. Everything here goes through the public API;
if any of these fail the package contract is broken, not just a detail.
"""

import json
import time

import numpy as np
import pytest

from infoeq import (
    CobbDouglasParams,
    EntropyParams,
    IERelation,
    InterestParams,
    LoessConfig,
    MarketEnsemble,
    MonteCarloConfig,
    PriceLevelParams,
    TimeSeries,
    avg_index,
    avg_output,
    bundled_params,
    bundled_series,
    cobb_douglas,
    compose,
    demand_curve,
    entropy,
    entropy_delta,
    entropy_stirling,
    fit_cobb_douglas,
    fit_interest,
    fit_price_level,
    fit_report,
    fluctuation_comparison,
    ge_source,
    interest_rate,
    interp_linear,
    invert,
    k_index,
    k_index_gradient,
    linearize,
    loess_smooth,
    monte_carlo,
    ode_oracle,
    price_level,
    price_level_at_index,
    ridge_sigma,
    series_changes,
    supply_curve,
)


def random_relation(rng):
    return IERelation(
        k=rng.uniform(0.2, 5.0),
        d_ref=rng.uniform(0.5, 10.0),
        s_ref=rng.uniform(0.5, 10.0),
    )


def test_relation_algebra_equivalences():
    start = time.perf_counter()
    rng = np.random.default_rng(101)
    for _ in range(100):
        rel = random_relation(rng)
        back = invert(invert(rel))
        assert (back.k, back.d_ref, back.s_ref) == (rel.k, rel.d_ref, rel.s_ref)

        ab = random_relation(rng)
        bc = random_relation(rng)
        assert compose(ab, bc).k == ab.k * bc.k

        # functional composition needs the middle quantity shared
        mid = IERelation(k=bc.k, d_ref=ab.s_ref, s_ref=bc.s_ref)
        chained = compose(ab, mid)
        s = mid.s_ref * rng.uniform(0.5, 2.0)
        assert ge_source(chained, s) == pytest.approx(
            ge_source(ab, ge_source(mid, s)), rel=1e-12
        )
    assert time.perf_counter() - start < 1.0


def test_closed_form_matches_numerical_integration():
    start = time.perf_counter()
    rng = np.random.default_rng(20260814)
    for _ in range(50):
        rel = random_relation(rng)
        s_end = rel.s_ref * rng.uniform(0.5, 3.0)
        exact = ge_source(rel, s_end)
        approx = ode_oracle(rel, s_end, steps=10_000)
        assert abs(approx - exact) / exact <= 1e-8

    # fourth-order stepping: halving the step cuts the error ~16x
    rel = IERelation(k=5.0, d_ref=2.0, s_ref=1.0)
    exact = ge_source(rel, 6.0)
    e_coarse = abs(ode_oracle(rel, 6.0, steps=1000) - exact) / exact
    e_fine = abs(ode_oracle(rel, 6.0, steps=2000) - exact) / exact
    assert e_coarse / e_fine >= 15.0
    assert time.perf_counter() - start < 10.0


def test_partial_curve_geometry_and_linearization_scaling():
    rel = IERelation(k=1.7, d_ref=3.0, s_ref=2.0)
    d0, s0 = 2.5, 1.8

    price_d, delta_d = demand_curve(rel, d0, np.linspace(1.0, 4.0, 201))
    order = np.argsort(delta_d)
    assert np.all(np.diff(price_d[order]) < 0)

    price_s, delta_s = supply_curve(rel, s0, np.linspace(1.5, 6.0, 201))
    order = np.argsort(delta_s)
    assert np.all(np.diff(price_s[order]) > 0)

    lin = linearize(rel, d0, s0)

    def max_errors(h):
        ds = np.linspace(-h, h, 101)
        pd, dd = demand_curve(rel, d0, rel.s_ref + ds)
        e_demand = np.max(np.abs((rel.d_ref + dd) - lin.demand(pd)))
        d = rel.d_ref * np.exp(rel.k * ds / s0)
        ps, dsv = supply_curve(rel, s0, d)
        e_supply = np.max(np.abs((rel.s_ref + dsv) - lin.supply(ps)))
        return e_demand, e_supply

    spans = [max_errors(h) for h in (0.1, 0.05, 0.025)]
    for (big_d, big_s), (small_d, small_s) in zip(spans, spans[1:]):
        assert 3.5 < big_d / small_d < 4.5
        assert 3.5 < big_s / small_s < 4.5


def test_quantity_theory_limit_and_index_gradient():
    # with the index pinned at 2 the level is proportional to money
    m = np.geomspace(400.0, 40000.0, 300)
    p = price_level_at_index(2.0, m, alpha=0.8, m0=500.0)
    ratio = p / m
    assert np.max(np.abs(ratio / ratio[0] - 1.0)) <= 1e-12

    params = PriceLevelParams(alpha=0.641, gamma=5.93e-4, m0=603.8)
    for n, money in ((5000.0, 800.0), (15518.0, 915.0), (400.0, 80.0)):
        dk_dn, dk_dm = k_index_gradient(n, money, params)
        hn, hm = 1e-6 * n, 1e-6 * money
        fd_n = (k_index(n + hn, money, params) - k_index(n - hn, money, params)) / (2.0 * hn)
        fd_m = (k_index(n, money + hm, params) - k_index(n, money - hm, params)) / (2.0 * hm)
        assert fd_n == pytest.approx(dk_dn, rel=1e-6)
        assert fd_m == pytest.approx(dk_dm, rel=1e-6)


def test_market_ensemble_statistics():
    start = time.perf_counter()
    rng = np.random.default_rng(5)
    for n0 in (3, 50):
        ens = MarketEnsemble(rng.normal(1.5, 0.5, n0))
        assert avg_output(ens, 1.0) == float(n0)

    ens = MarketEnsemble(rng.normal(1.5, 0.5, 40))
    grids = (
        np.geomspace(1.0, 1000.0, 120),
        np.linspace(1.0, 50.0, 77),
        np.array([1.0, 1.3, 7.9, 8.0, 400.0]),
    )
    for grid in grids:
        values = np.array([avg_index(ens, m) for m in grid])
        assert np.all(np.diff(values) <= 1e-12)

    config = MonteCarloConfig(
        n0=100, a_mean=1.5, a_sd=0.5, runs=500,
        m_grid=np.geomspace(1.0, 1000.0, 50), seed=0,
    )
    out = monte_carlo(config)
    initial = out.avg_a[:, 0]
    assert np.mean(np.abs(initial - 1.5) <= 0.15) >= 0.99
    assert np.mean(out.avg_a[:, -1]) < np.mean(initial)
    assert np.all(out.avg_n[:, 0] == 100.0)
    assert time.perf_counter() - start < 30.0


def test_entropy_growth_and_first_order_changes():
    params = EntropyParams(k=1.6, gamma=5.93e-4, m0=603.8)
    scale = params.gamma * params.m0

    n_values = scale * np.geomspace(1.5, 1e8, 300)
    values = np.array([entropy(v, params) for v in n_values])
    assert np.all(np.diff(values) > 0)

    for x in (100.0, 1e3, 1e6):
        n = x * scale
        exact = entropy(n, params)
        assert abs(entropy_stirling(n, params) - exact) / exact < 0.01

    # steps small against the occupation scale keep the residual in its
    # linear regime, so halving the step halves the error
    n = 500.0 * scale
    errors = []
    for dn in (0.1 * scale, 0.05 * scale, 0.025 * scale):
        fd = entropy(n + dn, params) - entropy(n, params)
        errors.append(abs(entropy_delta(n, dn, params) - fd))
    assert errors[0] / errors[1] == pytest.approx(2.0, rel=0.1)
    assert errors[1] / errors[2] == pytest.approx(2.0, rel=0.1)


def test_ridge_output_is_stationary_in_sigma():
    # a float64 central difference is roundoff-limited near 1e-5 at this
    # step size, so the difference is taken in 50-digit arithmetic
    import mpmath as mp

    with mp.workdps(50):
        for kappa in (1.1, 1.5, 2.0, 3.0):
            for gamma in (1e-4, 1e-2, 1.0):
                sigma = ridge_sigma(kappa, gamma)
                g = mp.mpf(gamma)
                s_star = mp.mpf(sigma)
                c = mp.log(s_star / g) / mp.mpf(kappa)

                def detector(s):
                    k = c / mp.log(s / g)
                    return k * s ** (k - 1)

                h = s_star * mp.mpf("1e-12")
                fd = (detector(s_star + h) - detector(s_star - h)) / (2 * h)
                assert abs(float(fd)) <= 1e-6


def test_fit_round_trips():
    start = time.perf_counter()
    grid = np.linspace(1960.0, 2014.0, 650)
    u = grid - grid[0]
    n = 600.0 * np.exp(0.068 * u - 1.5e-4 * u**2)
    m = 32.0 * np.exp(0.052 * u + 0.75e-4 * u**2)
    mb = m * (1.6 + 0.01 * u)
    capital = 2000.0 * np.exp(0.055 * u - 2e-4 * u**2)
    labor = 120.0 * np.exp(0.018 * u + 1e-4 * u**2)

    pl = PriceLevelParams(alpha=0.641, gamma=5.93e-4, m0=603.8)
    ir = InterestParams(k_i=3.49, k_p=0.124)
    cd = CobbDouglasParams(a=0.0024, k1=0.44, k2=0.84)

    p = price_level(n, m, pl)
    r_long = interest_rate(n, m, ir)
    r_short = interest_rate(n, mb, ir)
    output = cobb_douglas(capital, labor, cd)

    def series(v):
        return TimeSeries(grid, v)

    def worst(got, truth):
        return max(abs(g / t - 1.0) for g, t in zip(got, truth))

    rng = np.random.default_rng(7)

    def with_noise(v):
        return v * (1.0 + 0.001 * rng.standard_normal(v.size))

    for gate, noisy in ((0.01, False), (0.02, True)):
        pp = with_noise(p) if noisy else p
        rl = with_noise(r_long) if noisy else r_long
        rs = with_noise(r_short) if noisy else r_short
        nn = with_noise(output) if noisy else output

        out = fit_price_level(
            series(n), series(m), series(pp), grid,
            np.array([pl.alpha * 1.2, pl.gamma * 0.8, pl.m0 * 1.2]),
        )
        assert out.converged
        got = out.params()
        assert worst(
            (got["alpha"], got["gamma"], got["M0"]), (pl.alpha, pl.gamma, pl.m0)
        ) <= gate

        out = fit_interest(
            series(n), series(m), series(mb), series(rl), series(rs), grid,
            np.array([ir.k_i * 1.2, ir.k_p * 0.8]),
        )
        assert out.converged
        got = out.params()
        assert worst((got["k_i"], got["k_p"]), (ir.k_i, ir.k_p)) <= gate

        out = fit_cobb_douglas(
            series(nn), series(capital), series(labor), grid,
            np.array([cd.a * 1.2, cd.k1 * 0.8, cd.k2 * 1.2]),
        )
        assert out.converged
        got = out.params()
        assert worst((got["A"], got["k1"], got["k2"]), (cd.a, cd.k1, cd.k2)) <= gate

    assert time.perf_counter() - start < 60.0


def wls_oracle(ts, config, i):
    """Uncentered weighted least squares, evaluated at the target point."""
    d = np.abs(ts.t - ts.t[i])
    q = config.window(len(ts))
    idx = np.argsort(d, kind="stable")[:q]
    radius = d[idx][-1]
    w = (1.0 - np.clip(d[idx] / radius, 0.0, 1.0) ** 3) ** 3
    keep = w > 0
    x, y, w = ts.t[idx][keep], ts.v[idx][keep], w[keep]
    design = np.vander(x, config.degree + 1, increasing=True) * np.sqrt(w)[:, None]
    beta, *_ = np.linalg.lstsq(design, y * np.sqrt(w), rcond=None)
    return float(np.polyval(beta[::-1], ts.t[i]))


def test_loess_polynomial_reproduction_and_oracle():
    t = np.sort(np.random.default_rng(3).uniform(0.0, 20.0, 60))
    for coeffs in ((3.0,), (0.5, -2.0), (0.3, 1.0, -0.02)):
        v = np.polyval(coeffs, t)
        out = loess_smooth(TimeSeries(t, v), LoessConfig(degree=2, span=0.5))
        assert np.max(np.abs(out.v - v)) <= 1e-10

    rng = np.random.default_rng(17)
    t = np.sort(rng.uniform(0.0, 30.0, 45))
    ts = TimeSeries(t, np.sin(t / 3.0) + 0.1 * rng.normal(size=t.size))
    config = LoessConfig(degree=2, span=0.45)
    out = loess_smooth(ts, config)
    for i in range(len(t)):
        assert abs(out.v[i] - wls_oracle(ts, config, i)) <= 1e-10


def test_output_change_histogram_mass_and_determinism():
    changes = series_changes(bundled_series("gdp"))
    first = fluctuation_comparison(changes)
    assert float(np.sum(first.count)) == float(changes.size)

    again = fluctuation_comparison(series_changes(bundled_series("gdp")))
    assert np.array_equal(first.count, again.count)
    assert np.array_equal(first.theory, again.theory)
    assert np.array_equal(first.bin_left, again.bin_left)
    assert np.array_equal(first.bin_right, again.bin_right)


def test_bundled_snapshot_fit_report():
    # the snapshots carry noise the model does not describe, so no accuracy
    # gate applies; the report is informational and the guarantees are the
    # bookkeeping ones: convergence flag set, no ascent from the start
    gdp = bundled_series("gdp")
    money = bundled_series("mbcurrcir")
    deflator = bundled_series("pcepilfe")
    grid = np.linspace(1960.0, 2014.0, 55)
    cal = bundled_params()
    x0 = np.array([cal["alpha"] * 1.2, cal["gamma"] * 0.8, cal["M0"] * 1.2])

    n = interp_linear(gdp, grid)
    m = interp_linear(money, grid)
    p = interp_linear(deflator, grid)
    start_model = price_level(n, m, PriceLevelParams(alpha=x0[0], gamma=x0[1], m0=x0[2]))
    f_x0 = float(np.sum((np.log(start_model) - np.log(p)) ** 2))

    result = fit_price_level(gdp, money, deflator, grid, x0)
    report = fit_report(result)
    print()
    print(json.dumps(report, indent=2))
    assert result.f_star <= f_x0
    assert result.converged
    assert set(report) >= {"parameters", "f_star", "iterations", "converged"}
