import numpy as np
import pytest

from infoeq import (
    DomainError,
    FitProblem,
    FitResult,
    InterestParams,
    ModelDomainError,
    PriceLevelParams,
    RankDeficient,
    TimeSeries,
    cobb_douglas_loglinear,
    fit_cobb_douglas,
    fit_interest,
    fit_price_level,
    fit_report,
    interest_rate,
    minimize,
    price_level,
    sum_sq_residuals,
)


class TestFitProblem:
    def test_default_names(self):
        p = FitProblem(lambda x: float(x @ x), np.array([1.0, 2.0]))
        assert p.names == ("x0", "x1")

    def test_rejects_bad_x0(self):
        f = lambda x: 0.0
        with pytest.raises(DomainError):
            FitProblem(f, np.array([[1.0]]))
        with pytest.raises(DomainError):
            FitProblem(f, np.array([np.inf]))
        with pytest.raises(DomainError):
            FitProblem(f, np.array([]))

    def test_rejects_bad_bounds(self):
        f = lambda x: 0.0
        with pytest.raises(DomainError):
            FitProblem(f, np.array([0.0, 0.0]), lower=np.array([0.0]))
        with pytest.raises(DomainError):
            FitProblem(f, np.array([0.0]), lower=np.array([1.0]), upper=np.array([-1.0]))
        with pytest.raises(DomainError):
            FitProblem(f, np.array([5.0]), lower=np.array([0.0]), upper=np.array([1.0]))

    def test_rejects_bad_settings(self):
        f = lambda x: 0.0
        with pytest.raises(DomainError):
            FitProblem(f, np.array([0.0]), tol=0.0)
        with pytest.raises(DomainError):
            FitProblem(f, np.array([0.0]), max_iter=0)
        with pytest.raises(DomainError):
            FitProblem(f, np.array([0.0]), names=("a", "b"))


class TestMinimize:
    def test_shifted_quadratic(self):
        target = np.array([3.0, -2.0, 0.5])
        f = lambda x: float(np.sum((x - target) ** 2))
        out = minimize(FitProblem(f, np.zeros(3)))
        assert out.converged
        assert out.x == pytest.approx(target, abs=1e-8)
        assert out.f_star < 1e-15

    def test_anisotropic_quadratic(self):
        scales = np.array([1.0, 1e4])
        f = lambda x: float(np.sum(scales * (x - 1.0) ** 2))
        out = minimize(FitProblem(f, np.array([10.0, -10.0])))
        assert out.x == pytest.approx([1.0, 1.0], abs=1e-7)

    def test_rosenbrock(self):
        f = lambda x: float(100.0 * (x[1] - x[0] ** 2) ** 2 + (1.0 - x[0]) ** 2)
        out = minimize(FitProblem(f, np.array([-1.2, 1.0]), tol=1e-12))
        assert out.converged
        assert out.x == pytest.approx([1.0, 1.0], abs=1e-6)

    def test_never_worse_than_start(self):
        # nasty non-smooth objective; the only guarantee is no increase
        f = lambda x: float(np.sum(np.abs(x)) + 0.3 * np.sum(np.cos(7.0 * x)))
        x0 = np.array([2.3, -1.7])
        out = minimize(FitProblem(f, x0))
        assert out.f_star <= f(x0)

    def test_bounded_minimum_lands_on_boundary(self):
        f = lambda x: float((x[0] - 5.0) ** 2)
        out = minimize(
            FitProblem(f, np.array([0.5]), lower=np.array([0.0]), upper=np.array([2.0]))
        )
        assert out.x[0] == pytest.approx(2.0, abs=1e-9)
        assert out.x[0] <= 2.0

    def test_bounds_always_respected(self):
        calls = []
        lo, hi = np.array([-1.0, 0.0]), np.array([1.0, 3.0])

        def f(x):
            calls.append(x.copy())
            return float(np.sum((x - np.array([4.0, -4.0])) ** 2))

        minimize(FitProblem(f, np.array([0.0, 1.5]), lower=lo, upper=hi))
        seen = np.array(calls)
        assert np.all(seen >= lo - 1e-12)
        assert np.all(seen <= hi + 1e-12)

    def test_deterministic(self):
        f = lambda x: float((x[0] ** 2 - 3.0) ** 2 + np.sin(x[1]) ** 2 + x[1] ** 2 * 0.1)
        p = lambda: FitProblem(f, np.array([0.7, 1.9]), tol=1e-10)
        a, b = minimize(p()), minimize(p())
        assert np.array_equal(a.x, b.x)
        assert a.f_star == b.f_star
        assert a.iterations == b.iterations

    def test_iteration_cap_reports_non_convergence(self):
        f = lambda x: float(100.0 * (x[1] - x[0] ** 2) ** 2 + (1.0 - x[0]) ** 2)
        out = minimize(FitProblem(f, np.array([-1.2, 1.0]), max_iter=1))
        assert not out.converged
        assert out.f_star <= f(np.array([-1.2, 1.0]))

    def test_start_at_minimum(self):
        f = lambda x: float(np.sum(x**2))
        out = minimize(FitProblem(f, np.zeros(2)))
        assert out.converged
        assert out.f_star == 0.0

    def test_names_flow_through(self):
        f = lambda x: float(np.sum(x**2))
        out = minimize(FitProblem(f, np.array([1.0]), names=("gain",)))
        assert set(out.params()) == {"gain"}


class TestSumSqResiduals:
    def grid(self):
        return np.linspace(0.0, 4.0, 9)

    def line(self, x, t):
        return x[0] * t + x[1]

    def test_linear(self):
        t = self.grid()
        data = TimeSeries(t, 2.0 * t + 1.0)
        obj = sum_sq_residuals(self.line, data)
        assert obj(np.array([2.0, 1.0])) == 0.0
        assert obj(np.array([2.0, 0.0])) == pytest.approx(9.0, rel=1e-14)

    def test_log(self):
        t = self.grid()
        data = TimeSeries(t, np.exp(0.3 * t))
        obj = sum_sq_residuals(lambda x, tt: np.exp(x[0] * tt), data, transform="log")
        expect = float(np.sum((0.25 * t - 0.3 * t) ** 2))
        assert obj(np.array([0.25])) == pytest.approx(expect, rel=1e-12)

    def test_tuple_data(self):
        t = self.grid()
        obj = sum_sq_residuals(self.line, (t, t + 1.0))
        assert obj(np.array([1.0, 0.0])) == pytest.approx(9.0, rel=1e-14)

    def test_log_rejects_non_positive_data(self):
        t = self.grid()
        with pytest.raises(DomainError):
            sum_sq_residuals(self.line, (t, t - 1.0), transform="log")

    def test_log_rejects_non_positive_model(self):
        t = self.grid()
        obj = sum_sq_residuals(self.line, (t, t + 1.0), transform="log")
        with pytest.raises(DomainError):
            obj(np.array([1.0, -1.0]))

    def test_unknown_transform(self):
        with pytest.raises(DomainError):
            sum_sq_residuals(self.line, (self.grid(), self.grid() + 1.0), transform="sqrt")


def price_level_series(grid, params):
    u = grid - grid[0]
    n = TimeSeries(grid, 600.0 * np.exp(0.068 * u - 1.5e-4 * u**2))
    m = TimeSeries(grid, 32.0 * np.exp(0.052 * u + 0.75e-4 * u**2))
    p = TimeSeries(grid, price_level(n.v, m.v, params))
    return n, m, p


class TestFitPriceLevel:
    GRID = np.linspace(1960.0, 2014.0, 120)
    TRUE = PriceLevelParams(alpha=0.641, gamma=5.93e-4, m0=603.8)

    def test_recovers_parameters(self):
        n, m, p = price_level_series(self.GRID, self.TRUE)
        x0 = np.array([0.55, 7.0e-4, 520.0])
        out = fit_price_level(n, m, p, self.GRID, x0)
        assert out.converged
        got = out.params()
        assert got["alpha"] == pytest.approx(self.TRUE.alpha, rel=1e-4)
        assert got["gamma"] * got["M0"] == pytest.approx(
            self.TRUE.gamma * self.TRUE.m0, rel=1e-4
        )
        assert out.residuals is not None
        assert out.residuals.size == self.GRID.size

    def test_rejects_x0_outside_model_domain(self):
        # gamma*M0 at or above min(M) makes the log index undefined
        n, m, p = price_level_series(self.GRID, self.TRUE)
        bad = np.array([0.641, 0.5, 603.8])
        with pytest.raises(ModelDomainError):
            fit_price_level(n, m, p, self.GRID, bad)

    def test_rejects_unsafe_explicit_bounds(self):
        n, m, p = price_level_series(self.GRID, self.TRUE)
        x0 = np.array([0.641, 5.93e-4, 603.8])
        bounds = (np.array([0.1, 1e-5, 100.0]), np.array([2.0, 1.0, 5000.0]))
        with pytest.raises(ModelDomainError):
            fit_price_level(n, m, p, self.GRID, x0, bounds=bounds)

    def test_respects_max_iter(self):
        n, m, p = price_level_series(self.GRID, self.TRUE)
        out = fit_price_level(n, m, p, self.GRID, np.array([0.5, 8e-4, 450.0]), max_iter=1)
        assert not out.converged


class TestFitInterest:
    GRID = np.linspace(1960.0, 2014.0, 120)

    def test_recovers_parameters(self):
        grid = self.GRID
        u = grid - grid[0]
        k_i, k_p = 3.49, 0.124
        true = InterestParams(k_i=k_i, k_p=k_p)
        n = TimeSeries(grid, 600.0 * np.exp(0.068 * u - 1.5e-4 * u**2))
        m_long = TimeSeries(grid, 32.0 * np.exp(0.052 * u + 0.75e-4 * u**2))
        m_short = TimeSeries(grid, m_long.v * (1.6 + 0.01 * u))
        r_long = TimeSeries(grid, interest_rate(n.v, m_long.v, true))
        r_short = TimeSeries(grid, interest_rate(n.v, m_short.v, true))
        out = fit_interest(n, m_long, m_short, r_long, r_short, grid, np.array([3.0, 0.2]))
        assert out.converged
        got = out.params()
        assert got["k_i"] == pytest.approx(k_i, rel=1e-6)
        assert got["k_p"] == pytest.approx(k_p, rel=1e-6)
        # residuals cover both maturities
        assert out.residuals.size == 2 * grid.size


class TestCobbDouglasLogLinear:
    def test_exact_recovery(self):
        rng = np.random.default_rng(8)
        capital = rng.uniform(50.0, 200.0, 40)
        labor = rng.uniform(20.0, 90.0, 40)
        output = 0.17 * capital**1.3 * labor**0.6
        got = cobb_douglas_loglinear(capital, labor, output)
        assert got.a == pytest.approx(0.17, rel=1e-10)
        assert got.k1 == pytest.approx(1.3, rel=1e-10)
        assert got.k2 == pytest.approx(0.6, rel=1e-10)

    def test_constant_capital_is_rank_deficient(self):
        labor = np.linspace(10.0, 20.0, 30)
        capital = np.full(30, 100.0)
        output = 2.0 * labor
        with pytest.raises(RankDeficient):
            cobb_douglas_loglinear(capital, labor, output)

    def test_rejects_non_positive_inputs(self):
        with pytest.raises(DomainError):
            cobb_douglas_loglinear(np.array([1.0, -1.0]), np.ones(2), np.ones(2))


class TestFitCobbDouglas:
    def test_recovers_parameters_from_closed_form_start(self):
        grid = np.linspace(1960.0, 2014.0, 120)
        u = grid - grid[0]
        n = TimeSeries(grid, 600.0 * np.exp(0.068 * u - 1.5e-4 * u**2))
        k = TimeSeries(grid, 2000.0 * np.exp(0.055 * u - 2e-4 * u**2))
        l = TimeSeries(grid, 120.0 * np.exp(0.018 * u + 1e-4 * u**2))
        a_true, k1_true, k2_true = 0.0024, 0.44, 0.84
        n = TimeSeries(grid, a_true * k.v**k1_true * l.v**k2_true)
        out = fit_cobb_douglas(n, k, l, grid)
        assert out.converged
        got = out.params()
        assert got["A"] == pytest.approx(a_true, rel=1e-3)
        assert got["k1"] == pytest.approx(k1_true, rel=1e-3)
        assert got["k2"] == pytest.approx(k2_true, rel=1e-3)


class TestFitReport:
    def test_structure(self):
        r = FitResult(
            x=np.array([1.5, 2.5]),
            f_star=0.125,
            iterations=7,
            converged=True,
            names=("a", "b"),
            residuals=np.array([0.1, -0.2, 0.2]),
        )
        report = fit_report(r)
        assert report["parameters"] == {"a": 1.5, "b": 2.5}
        assert report["f_star"] == 0.125
        assert report["iterations"] == 7
        assert report["converged"] is True
        res = report["residuals"]
        assert res["count"] == 3
        assert res["rmse"] == pytest.approx(np.sqrt(0.09 / 3.0), rel=1e-12)
        assert res["max_abs"] == pytest.approx(0.2, rel=1e-12)

    def test_no_residuals(self):
        r = FitResult(x=np.array([1.0]), f_star=0.0, iterations=1, converged=True)
        assert "residuals" not in fit_report(r)
