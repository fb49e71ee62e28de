"""Derivative-free least-squares fitting for the model families.

The minimizer is a principal-axis direction-set search: cyclic line
minimizations along a direction set that starts as the coordinate axes,
with the largest-decrease direction replaced by the cycle's net
displacement when that passes the standard acceptance test, and the set
restarted to the axes every n**2 line searches. Line minimization is
bracketing (a geometric probe ladder followed by doubling) plus golden
section and one parabolic polish. Box bounds are enforced by projecting
the admissible step interval, never by penalty, so model domain errors
are unreachable during a search whose box is safe.

Everything here is deterministic: the same problem yields the same
FitResult bit-for-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, ModelDomainError, RankDeficient
from .macro import (
    CobbDouglasParams,
    InterestParams,
    PriceLevelParams,
    cobb_douglas,
    interest_rate,
    price_level,
)
from .timeseries import LoessConfig, TimeSeries, interp_linear, loess_smooth

__all__ = [
    "FitProblem",
    "FitResult",
    "sum_sq_residuals",
    "minimize",
    "fit_price_level",
    "fit_interest",
    "fit_cobb_douglas",
    "cobb_douglas_loglinear",
    "fit_report",
]

_GOLD = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class FitProblem:
    """Objective plus box and starting point.

    tol controls both the line-search bracket width and the convergence
    test (parameter displacement and objective decrease below tol on two
    consecutive cycles), measured on parameters scaled by |x0|.
    """

    objective: object
    x0: np.ndarray
    lower: np.ndarray | None = None
    upper: np.ndarray | None = None
    names: tuple[str, ...] = ()
    tol: float = 1e-8
    max_iter: int = 10_000

    def __post_init__(self):
        x0 = np.asarray(self.x0, dtype=float)
        if x0.ndim != 1 or x0.size == 0 or not np.all(np.isfinite(x0)):
            raise DomainError("x0 must be a finite 1-d array")
        lower = np.full(x0.size, -np.inf) if self.lower is None else np.asarray(self.lower, dtype=float)
        upper = np.full(x0.size, np.inf) if self.upper is None else np.asarray(self.upper, dtype=float)
        if lower.shape != x0.shape or upper.shape != x0.shape:
            raise DomainError("bounds must match x0 in shape")
        if np.any(lower > upper):
            raise DomainError("lower bound exceeds upper bound")
        if np.any(x0 < lower) or np.any(x0 > upper):
            raise DomainError("x0 must lie inside the bounds")
        if not (self.tol > 0.0 and math.isfinite(self.tol)):
            raise DomainError("tol must be positive and finite")
        if int(self.max_iter) < 1:
            raise DomainError("max_iter must be at least 1")
        names = tuple(self.names) if self.names else tuple(f"x{i}" for i in range(x0.size))
        if len(names) != x0.size:
            raise DomainError("names must match x0 in length")
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "names", names)


@dataclass(frozen=True)
class FitResult:
    """Minimizer output. f_star never exceeds the objective at x0."""

    x: np.ndarray
    f_star: float
    iterations: int
    converged: bool
    names: tuple[str, ...] = ()
    residuals: np.ndarray | None = None

    def params(self) -> dict[str, float]:
        return {name: float(v) for name, v in zip(self.names, self.x)}


def sum_sq_residuals(model, data, transform: str = "linear"):
    """Build the objective sum((T(model(x, t)) - T(v))**2).

    model is a callable model(x, t_array) -> values; data is a
    TimeSeries or a (t, v) pair; transform is "linear" or "log". The log
    transform requires positive data and positive model output (a safe
    search box must guarantee the latter).
    """
    if isinstance(data, TimeSeries):
        t, v = data.t, data.v
    else:
        t, v = (np.asarray(p, dtype=float) for p in data)
    if transform == "linear":
        target = v

        def objective(x):
            r = model(x, t) - target
            return float(np.dot(r, r))

    elif transform == "log":
        if np.any(v <= 0.0):
            raise DomainError("log transform requires positive data")
        target = np.log(v)

        def objective(x):
            out = model(x, t)
            if np.any(out <= 0.0):
                raise DomainError("log transform requires positive model output")
            r = np.log(out) - target
            return float(np.dot(r, r))

    else:
        raise DomainError(f"unknown transform {transform!r}")
    return objective


def _admissible_span(x, d, lo, hi):
    t_lo, t_hi = -math.inf, math.inf
    for xi, di, li, ui in zip(x, d, lo, hi):
        if di == 0.0:
            continue
        a = (li - xi) / di
        b = (ui - xi) / di
        if a > b:
            a, b = b, a
        t_lo = max(t_lo, a)
        t_hi = min(t_hi, b)
    return t_lo, t_hi


def _parabola_vertex(ta, fa, tb, fb, tc, fc):
    d1 = (tb - ta) * (fb - fc)
    d2 = (tb - tc) * (fb - fa)
    denom = 2.0 * (d1 - d2)
    if denom == 0.0:
        return None
    return tb - ((tb - ta) * d1 - (tb - tc) * d2) / denom


def _line_min(f, x, d, fx, lo, hi, tol):
    """Minimize f along x + t*d inside the box. Never accepts an increase."""
    t_lo, t_hi = _admissible_span(x, d, lo, hi)
    if not (t_lo < t_hi):
        return x, fx

    # probe ladder: geometric descent finds a first decrease even when the
    # 1-d dip is orders of magnitude narrower than the natural scale
    best_t, best_f = 0.0, fx
    found = False
    h = 1.0
    while h >= 1e-12:
        for sign in (1.0, -1.0):
            t = min(max(sign * h, t_lo), t_hi)
            if t == 0.0:
                continue
            ft = f(x + t * d)
            if ft < best_f:
                best_t, best_f = t, ft
                found = True
                break
        if found:
            break
        h *= 0.25
    if not found:
        return x, fx

    # expand by doubling until the function turns upward
    t0, f0 = 0.0, fx
    t1, f1 = best_t, best_f
    while True:
        t2 = t1 * 2.0
        t2 = min(t2, t_hi) if t1 > 0 else max(t2, t_lo)
        if t2 == t1:
            f2 = f1
            break
        f2 = f(x + t2 * d)
        if f2 >= f1:
            break
        t0, f0 = t1, f1
        t1, f1 = t2, f2

    a, b = (t0, t2) if t0 < t2 else (t2, t0)
    width = b - a
    c = b - _GOLD * (b - a)
    e = a + _GOLD * (b - a)
    fc = f(x + c * d)
    fe = f(x + e * d)
    while (b - a) > tol and (b - a) > 1e-14 * max(abs(a), abs(b), 1e-3):
        if fc < fe:
            b, e, fe = e, c, fc
            c = b - _GOLD * (b - a)
            fc = f(x + c * d)
        else:
            a, c, fc = c, e, fe
            e = a + _GOLD * (b - a)
            fe = f(x + e * d)
    if fc < fe:
        tb_, fb_ = c, fc
        ta_, fa_ = a, f(x + a * d)
        tc_, fc_ = e, fe
    else:
        tb_, fb_ = e, fe
        ta_, fa_ = c, fc
        tc_, fc_ = b, f(x + b * d)

    t_best, f_best = tb_, fb_
    vertex = _parabola_vertex(ta_, fa_, tb_, fb_, tc_, fc_)
    if vertex is not None and t_lo <= vertex <= t_hi and abs(vertex - tb_) < width:
        fv = f(x + vertex * d)
        if fv < f_best:
            t_best, f_best = vertex, fv

    if f_best >= fx:
        return x, fx
    return x + t_best * d, f_best


def minimize(problem: FitProblem) -> FitResult:
    """Principal-axis search over the problem box. Deterministic."""
    scale = np.where(np.abs(problem.x0) > 0.0, np.abs(problem.x0), 1.0)
    lo = problem.lower / scale
    hi = problem.upper / scale

    def f(z):
        return float(problem.objective(z * scale))

    n = problem.x0.size
    z = problem.x0 / scale
    fz = f(z)
    dirs = np.eye(n)
    line_searches = 0
    quiet_cycles = 0
    tol = problem.tol
    iterations = 0
    converged = False

    for iterations in range(1, int(problem.max_iter) + 1):
        if line_searches >= n * n:
            # periodic restart; applied at cycle boundaries so a freshly
            # accepted displacement direction survives its own cycle
            dirs = np.eye(n)
            line_searches = 0
        z_old, f_old = z.copy(), fz
        biggest_drop, biggest_idx = 0.0, 0
        f_prev = f_old
        for i in range(n):
            z, fz = _line_min(f, z, dirs[i], fz, lo, hi, tol)
            drop = f_prev - fz
            f_prev = fz
            if drop > biggest_drop:
                biggest_drop, biggest_idx = drop, i
            line_searches += 1
        displacement = z - z_old
        norm = float(np.linalg.norm(displacement))
        if norm > 0.0:
            extrapolated = np.clip(2.0 * z - z_old, lo, hi)
            f_ext = f(extrapolated)
            if f_ext < f_old:
                test = (
                    2.0 * (f_old - 2.0 * fz + f_ext) * (f_old - fz - biggest_drop) ** 2
                    - biggest_drop * (f_old - f_ext) ** 2
                )
                if test < 0.0:
                    dirs[biggest_idx] = displacement / norm
                    z, fz = _line_min(f, z, dirs[biggest_idx], fz, lo, hi, tol)
                    line_searches += 1
        if float(np.max(np.abs(z - z_old))) < tol and (f_old - fz) < tol:
            quiet_cycles += 1
            if quiet_cycles >= 2:
                converged = True
                break
        else:
            quiet_cycles = 0

    return FitResult(
        x=z * scale,
        f_star=fz,
        iterations=iterations,
        converged=converged,
        names=problem.names,
    )


def _prepare(ts: TimeSeries, grid, smooth: LoessConfig | None) -> np.ndarray:
    if smooth is not None:
        ts = loess_smooth(ts, smooth)
    return np.asarray(interp_linear(ts, grid), dtype=float)


def _default_bounds(x0: np.ndarray, spread: float = 5.0):
    return x0 / spread, x0 * spread


def fit_price_level(
    n_ts: TimeSeries,
    m_ts: TimeSeries,
    p_ts: TimeSeries,
    grid,
    x0,
    bounds=None,
    tol: float = 1e-8,
    max_iter: int = 10_000,
    smooth: LoessConfig | None = None,
) -> FitResult:
    """Fit (alpha, gamma, m0) of the price level to a deflator series.

    Residuals are taken in log space. The box is tightened (or rejected)
    so that gamma*m0 stays below the smallest aggregate on the grid and
    the model never leaves its domain during the search.
    """
    grid = np.asarray(grid, dtype=float)
    n = _prepare(n_ts, grid, smooth)
    m = _prepare(m_ts, grid, smooth)
    p = _prepare(p_ts, grid, smooth)
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (3,) or np.any(x0 <= 0.0):
        raise DomainError("x0 must be positive (alpha, gamma, m0)")

    defaulted = bounds is None
    lower, upper = _default_bounds(x0) if defaulted else (
        np.asarray(bounds[0], dtype=float),
        np.asarray(bounds[1], dtype=float),
    )
    if np.any(lower <= 0.0):
        raise DomainError("price level bounds must be positive")

    # keep the k_index logs positive across the whole box
    v_min = float(min(np.min(n), np.min(m)))
    cap = v_min * math.exp(-0.05)
    if x0[1] * x0[2] >= cap:
        raise ModelDomainError("gamma*m0 at x0 is too close to the data scale")
    excess = (upper[1] * upper[2]) / cap
    if excess > 1.0:
        if not defaulted:
            raise ModelDomainError("bounds admit gamma*m0 beyond the data scale")
        shrink = math.sqrt(excess)
        upper = upper.copy()
        upper[1] /= shrink
        upper[2] /= shrink
        upper[1] = max(upper[1], x0[1])
        upper[2] = max(upper[2], x0[2])
        if upper[1] * upper[2] >= cap:
            raise ModelDomainError("gamma*m0 at x0 is too close to the data scale")

    n_const, m_const = n, m

    def model(x, t):
        params = PriceLevelParams(alpha=x[0], gamma=x[1], m0=x[2])
        return price_level(n_const, m_const, params)

    objective = sum_sq_residuals(model, (grid, p), transform="log")
    problem = FitProblem(
        objective=objective,
        x0=x0,
        lower=lower,
        upper=upper,
        names=("alpha", "gamma", "M0"),
        tol=tol,
        max_iter=max_iter,
    )
    result = minimize(problem)
    fitted = PriceLevelParams(*result.x)
    residuals = np.log(price_level(n, m, fitted)) - np.log(p)
    return replace(result, residuals=residuals)


def fit_interest(
    n_ts: TimeSeries,
    m_long_ts: TimeSeries,
    m_short_ts: TimeSeries,
    long_rate_ts: TimeSeries,
    short_rate_ts: TimeSeries,
    grid,
    x0,
    bounds=None,
    tol: float = 1e-8,
    max_iter: int = 10_000,
    smooth: LoessConfig | None = None,
) -> FitResult:
    """Simultaneously fit (k_i, k_p) to long and short rates in log space.

    The long rate pairs aggregate output with the narrow aggregate (for
    example physical currency), the short rate with the full base; both
    share the same two parameters, and the objective is the plain sum of
    the two markets' log-residual sums.
    """
    grid = np.asarray(grid, dtype=float)
    n = _prepare(n_ts, grid, smooth)
    m_long = _prepare(m_long_ts, grid, smooth)
    m_short = _prepare(m_short_ts, grid, smooth)
    r_long = _prepare(long_rate_ts, grid, smooth)
    r_short = _prepare(short_rate_ts, grid, smooth)
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (2,) or np.any(x0 <= 0.0):
        raise DomainError("x0 must be positive (k_i, k_p)")
    lower, upper = _default_bounds(x0) if bounds is None else (
        np.asarray(bounds[0], dtype=float),
        np.asarray(bounds[1], dtype=float),
    )

    def model_long(x, t):
        return interest_rate(n, m_long, InterestParams(k_i=x[0], k_p=x[1]))

    def model_short(x, t):
        return interest_rate(n, m_short, InterestParams(k_i=x[0], k_p=x[1]))

    obj_long = sum_sq_residuals(model_long, (grid, r_long), transform="log")
    obj_short = sum_sq_residuals(model_short, (grid, r_short), transform="log")

    def objective(x):
        return obj_long(x) + obj_short(x)

    problem = FitProblem(
        objective=objective,
        x0=x0,
        lower=lower,
        upper=upper,
        names=("k_i", "k_p"),
        tol=tol,
        max_iter=max_iter,
    )
    result = minimize(problem)
    fitted = InterestParams(*result.x)
    residuals = np.concatenate(
        [
            np.log(interest_rate(n, m_long, fitted)) - np.log(r_long),
            np.log(interest_rate(n, m_short, fitted)) - np.log(r_short),
        ]
    )
    return replace(result, residuals=residuals)


def cobb_douglas_loglinear(capital, labor, output) -> CobbDouglasParams:
    """Closed-form (a, k1, k2) by ordinary least squares on logs.

    Raises RankDeficient when capital or labor is constant (or the two
    are collinear in logs), in which case the exponents are not
    identified.
    """
    kv = np.asarray(capital, dtype=float)
    lv = np.asarray(labor, dtype=float)
    nv = np.asarray(output, dtype=float)
    if np.any(kv <= 0.0) or np.any(lv <= 0.0) or np.any(nv <= 0.0):
        raise DomainError("capital, labor, and output must be positive")
    design = np.column_stack([np.ones_like(kv), np.log(kv), np.log(lv)])
    if np.linalg.matrix_rank(design) < 3:
        raise RankDeficient("constant or collinear regressors leave k1, k2 unidentified")
    beta, *_ = np.linalg.lstsq(design, np.log(nv), rcond=None)
    return CobbDouglasParams(a=float(math.exp(beta[0])), k1=float(beta[1]), k2=float(beta[2]))


def fit_cobb_douglas(
    n_ts: TimeSeries,
    k_ts: TimeSeries,
    l_ts: TimeSeries,
    grid,
    x0=None,
    bounds=None,
    tol: float = 1e-8,
    max_iter: int = 10_000,
    smooth: LoessConfig | None = None,
) -> FitResult:
    """Fit (a, k1, k2) in log space; defaults start from the closed form.

    The log-linear closed form is also the cross-check: with default
    bounds the search refines it in place, so the two agree tightly.
    """
    grid = np.asarray(grid, dtype=float)
    n = _prepare(n_ts, grid, smooth)
    kv = _prepare(k_ts, grid, smooth)
    lv = _prepare(l_ts, grid, smooth)
    closed = cobb_douglas_loglinear(kv, lv, n)
    if x0 is None:
        x0 = np.array([closed.a, closed.k1, closed.k2])
    else:
        x0 = np.asarray(x0, dtype=float)
    if x0.shape != (3,) or x0[0] <= 0.0:
        raise DomainError("x0 must be (a > 0, k1, k2)")
    if bounds is None:
        lower = np.array([x0[0] / 5.0, x0[1] - 2.0, x0[2] - 2.0])
        upper = np.array([x0[0] * 5.0, x0[1] + 2.0, x0[2] + 2.0])
    else:
        lower = np.asarray(bounds[0], dtype=float)
        upper = np.asarray(bounds[1], dtype=float)

    def model(x, t):
        return cobb_douglas(kv, lv, CobbDouglasParams(a=x[0], k1=x[1], k2=x[2]))

    objective = sum_sq_residuals(model, (grid, n), transform="log")
    problem = FitProblem(
        objective=objective,
        x0=x0,
        lower=lower,
        upper=upper,
        names=("A", "k1", "k2"),
        tol=tol,
        max_iter=max_iter,
    )
    result = minimize(problem)
    fitted = CobbDouglasParams(*result.x)
    residuals = np.log(cobb_douglas(kv, lv, fitted)) - np.log(n)
    return replace(result, residuals=residuals)


def fit_report(result: FitResult) -> dict:
    """Plain-dict summary of a fit: parameters, objective, residual stats."""
    report = {
        "parameters": result.params(),
        "f_star": float(result.f_star),
        "iterations": int(result.iterations),
        "converged": bool(result.converged),
    }
    if result.residuals is not None and result.residuals.size:
        r = result.residuals
        report["residuals"] = {
            "count": int(r.size),
            "rmse": float(np.sqrt(np.mean(r**2))),
            "max_abs": float(np.max(np.abs(r))),
        }
    return report
