"""Macroeconomic models built on information-equilibrium relations.

The price level model treats aggregate demand N (nominal output) as the
source and the currency base M as the destination with a slowly varying
index k(N, M); the quantity theory of money is the k = 2 limit. Interest
rates, an Okun-style hours identity, Cobb-Douglas production, a Solow
capital equilibrium, AD-AS and IS-LM curve generators, and the ridge line
of the price-level surface all reduce to the same handful of closed forms.

Scalar formulas accept numpy arrays and broadcast; series-driven models
take TimeSeries inputs and evaluate on explicit decimal-year grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateEquilibrium, DomainError, ModelDomainError
from .relations import IERelation, ge_price
from .timeseries import LoessConfig, TimeSeries, interp_linear, loess_smooth, log_growth

__all__ = [
    "PriceLevelParams",
    "InterestParams",
    "CobbDouglasParams",
    "SolowCapitalParams",
    "CurveShift",
    "ADASCurves",
    "ISLMCurves",
    "k_index",
    "k_index_gradient",
    "price_level",
    "price_level_at_index",
    "inflation_model",
    "growth_relations",
    "interest_rate",
    "okun_hours",
    "cobb_douglas",
    "solow_investment",
    "solow_depreciation",
    "solow_equilibrium",
    "solow_crossing",
    "adas_curves",
    "adas_equilibrium",
    "islm_curves",
    "islm_equilibrium",
    "money_mediation",
    "output_investment_relation",
    "ridge_sigma",
]


def _positive_scalar(value, label: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{label} must be positive and finite")
    return value


@dataclass(frozen=True)
class PriceLevelParams:
    """Price level P = alpha * k(N, M) * (M/m0)**(k-1).

    gamma * m0 is the common scale inside both logarithms of k(N, M);
    alpha normalizes P to the index year of the deflator being modelled.
    """

    alpha: float
    gamma: float
    m0: float

    def __post_init__(self):
        for label in ("alpha", "gamma", "m0"):
            _positive_scalar(getattr(self, label), label)


@dataclass(frozen=True)
class InterestParams:
    """Effective interest rate model i**k_i = (1/k_p) * N/M."""

    k_i: float
    k_p: float

    def __post_init__(self):
        _positive_scalar(self.k_i, "k_i")
        _positive_scalar(self.k_p, "k_p")


@dataclass(frozen=True)
class CobbDouglasParams:
    """Output N = a * K**k1 * L**k2 (exponents unconstrained in sign)."""

    a: float
    k1: float
    k2: float

    def __post_init__(self):
        _positive_scalar(self.a, "a")
        for label in ("k1", "k2"):
            value = float(getattr(self, label))
            if not math.isfinite(value):
                raise DomainError(f"{label} must be finite")


@dataclass(frozen=True)
class SolowCapitalParams:
    """Capital market: investment I = i0*(K/k0)**(1/sigma), depreciation
    Dep = dep0*(K/k0)**(1/delta). sigma > delta gives a stable finite
    equilibrium."""

    sigma: float
    delta: float
    k0: float
    i0: float
    dep0: float

    def __post_init__(self):
        for label in ("sigma", "delta", "k0", "i0", "dep0"):
            _positive_scalar(getattr(self, label), label)


@dataclass(frozen=True)
class CurveShift:
    """Additive shifts applied to curve generators (totals must stay positive)."""

    delta_n: float = 0.0
    delta_m: float = 0.0
    delta_s: float = 0.0


def _log_ratio(value, scale: float, label: str):
    """log(value/scale) requiring value/scale > 1 (log must stay positive)."""
    arr = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ModelDomainError(f"{label} must be finite")
    ratio = arr / scale
    if np.any(ratio <= 1.0):
        raise ModelDomainError(
            f"{label}/(gamma*m0) must exceed 1 (got min {np.min(ratio)!r})"
        )
    return np.log(ratio)


def k_index(n, m, params: PriceLevelParams):
    """Information-transfer index k(N, M) = log(N/(gamma*m0)) / log(M/(gamma*m0))."""
    scale = params.gamma * params.m0
    out = _log_ratio(n, scale, "n") / _log_ratio(m, scale, "m")
    return float(out) if out.ndim == 0 else out


def k_index_gradient(n, m, params: PriceLevelParams):
    """Closed-form partials (dk/dn, dk/dm) of k_index.

    dk/dn = 1/(n*log(m/(gamma*m0))),
    dk/dm = -log(n/(gamma*m0))/(m*log(m/(gamma*m0))**2).
    Both vanish as n and m grow, which is what makes k slowly varying.
    """
    scale = params.gamma * params.m0
    log_n = _log_ratio(n, scale, "n")
    log_m = _log_ratio(m, scale, "m")
    n = np.asarray(n, dtype=float)
    m = np.asarray(m, dtype=float)
    dk_dn = 1.0 / (n * log_m)
    dk_dm = -log_n / (m * log_m**2)
    if dk_dn.ndim == 0:
        return float(dk_dn), float(dk_dm)
    return dk_dn, dk_dm


def price_level_at_index(k, m, alpha: float, m0: float):
    """Core price level P = alpha * k * (m/m0)**(k-1) at a given index k."""
    _positive_scalar(alpha, "alpha")
    _positive_scalar(m0, "m0")
    k = np.asarray(k, dtype=float)
    m = np.asarray(m, dtype=float)
    if np.any(k <= 0.0) or np.any(m <= 0.0):
        raise ModelDomainError("k and m must be positive")
    out = np.exp(np.log(k) + math.log(alpha) + (k - 1.0) * (np.log(m) - math.log(m0)))
    return float(out) if out.ndim == 0 else out


def price_level(n, m, params: PriceLevelParams):
    """Price level with the index evaluated from (n, m)."""
    k = k_index(n, m, params)
    return price_level_at_index(k, m, params.alpha, params.m0)


def inflation_model(
    n_ts: TimeSeries,
    m_ts: TimeSeries,
    params: PriceLevelParams,
    grid,
    smooth: LoessConfig | None = None,
) -> TimeSeries:
    """Model inflation: annualized log growth of the model price level.

    Inputs may optionally be LOESS-smoothed first (pass a LoessConfig),
    mirroring how noisy measured aggregates are prepared.
    """
    if smooth is not None:
        n_ts = loess_smooth(n_ts, smooth)
        m_ts = loess_smooth(m_ts, smooth)
    grid = np.asarray(grid, dtype=float)
    n = interp_linear(n_ts, grid)
    m = interp_linear(m_ts, grid)
    p = price_level(n, m, params)
    return log_growth(TimeSeries(grid, p, name="model price level"))


def growth_relations(k, m_growth):
    """Continuously-compounded growth identities at constant k.

    Returns (inflation, output growth) = ((k-1)*m_growth, k*m_growth).
    """
    k = np.asarray(k, dtype=float)
    m_growth = np.asarray(m_growth, dtype=float)
    pi = (k - 1.0) * m_growth
    n_growth = k * m_growth
    if pi.ndim == 0 and n_growth.ndim == 0:
        return float(pi), float(n_growth)
    return pi, n_growth


def interest_rate(n, m, params: InterestParams):
    """Effective rate i = ((n/m)/k_p)**(1/k_i).

    Homogeneous of degree zero in (n, m): only the ratio matters.
    """
    n = np.asarray(n, dtype=float)
    m = np.asarray(m, dtype=float)
    if np.any(n <= 0.0) or np.any(m <= 0.0):
        raise ModelDomainError("n and m must be positive")
    out = np.exp((np.log(n) - np.log(m) - math.log(params.k_p)) / params.k_i)
    return float(out) if out.ndim == 0 else out


def okun_hours(n_ts: TimeSeries, p_ts: TimeSeries, k_h: float, grid) -> TimeSeries:
    """Hours-worked identity H(t) = (1/k_h) * N(t)/P(t) on the grid.

    log_growth of the result equals the real-output growth rate, which is
    the Okun-style link between hours growth and RGDP growth.
    """
    _positive_scalar(k_h, "k_h")
    grid = np.asarray(grid, dtype=float)
    n = np.asarray(interp_linear(n_ts, grid), dtype=float)
    p = np.asarray(interp_linear(p_ts, grid), dtype=float)
    if np.any(p <= 0.0) or np.any(n <= 0.0):
        raise ModelDomainError("n and p must be positive")
    return TimeSeries(grid, n / p / k_h, name="hours", units="h")


def cobb_douglas(capital, labor, params: CobbDouglasParams):
    """Output a * K**k1 * L**k2.

    Accepts value arrays, or two TimeSeries sharing timestamps (returns a
    TimeSeries in that case).
    """
    as_series = isinstance(capital, TimeSeries) and isinstance(labor, TimeSeries)
    if as_series:
        if not np.array_equal(capital.t, labor.t):
            raise DomainError("capital and labor series must share timestamps")
        t, kv, lv = capital.t, capital.v, labor.v
    else:
        kv = np.asarray(capital, dtype=float)
        lv = np.asarray(labor, dtype=float)
    if np.any(kv <= 0.0) or np.any(lv <= 0.0):
        raise ModelDomainError("capital and labor must be positive")
    out = np.exp(math.log(params.a) + params.k1 * np.log(kv) + params.k2 * np.log(lv))
    if as_series:
        return TimeSeries(t, out, name="output")
    return float(out) if out.ndim == 0 else out


def solow_investment(capital, params: SolowCapitalParams):
    """Investment curve I(K) = i0 * (K/k0)**(1/sigma)."""
    kv = np.asarray(capital, dtype=float)
    if np.any(kv <= 0.0):
        raise ModelDomainError("capital must be positive")
    out = params.i0 * np.exp(np.log(kv / params.k0) / params.sigma)
    return float(out) if out.ndim == 0 else out


def solow_depreciation(capital, params: SolowCapitalParams):
    """Depreciation curve Dep(K) = dep0 * (K/k0)**(1/delta)."""
    kv = np.asarray(capital, dtype=float)
    if np.any(kv <= 0.0):
        raise ModelDomainError("capital must be positive")
    out = params.dep0 * np.exp(np.log(kv / params.k0) / params.delta)
    return float(out) if out.ndim == 0 else out


def solow_equilibrium(params: SolowCapitalParams) -> float:
    """Equilibrium capital K* = k0 * exp(sigma*delta*log(i0/dep0)/(sigma-delta)).

    At K* investment equals depreciation; for sigma > delta the point is
    stable (investment falls below depreciation just above K*).
    """
    if params.sigma == params.delta:
        raise DegenerateEquilibrium("sigma == delta leaves the crossing undefined")
    expo = params.sigma * params.delta * math.log(params.i0 / params.dep0)
    return params.k0 * math.exp(expo / (params.sigma - params.delta))


def solow_crossing(params: SolowCapitalParams, tol: float = 1e-10) -> float:
    """Locate I(K) = Dep(K) numerically (bisection in log K).

    Independent check of solow_equilibrium.
    """
    if params.sigma == params.delta:
        raise DegenerateEquilibrium("sigma == delta leaves the crossing undefined")

    log_k0 = math.log(params.k0)

    def gap(log_k):
        # log I(K) - log Dep(K), kept in log space so wide brackets cannot overflow
        log_inv = math.log(params.i0) + (log_k - log_k0) / params.sigma
        log_dep = math.log(params.dep0) + (log_k - log_k0) / params.delta
        return log_inv - log_dep

    return math.exp(_bisect_root(gap, log_k0, tol=tol))


def _bisect_root(g, x0: float, tol: float = 1e-10, max_expand: int = 200) -> float:
    """Root of a monotone function by expansion bracketing plus bisection."""
    h = 1.0
    g0 = g(x0)
    if g0 == 0.0:
        return x0
    lo = hi = x0
    glo = ghi = g0
    for _ in range(max_expand):
        if (glo < 0.0) != (ghi < 0.0) or glo == 0.0 or ghi == 0.0:
            break
        lo -= h
        hi += h
        glo = g(lo)
        ghi = g(hi)
        h *= 2.0
    else:
        raise DomainError("failed to bracket a root")
    if glo > ghi:  # orient so g(lo) <= 0 <= g(hi); midpoints are order-free
        lo, hi = hi, lo
        glo, ghi = ghi, glo
    while abs(hi - lo) > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        gm = g(mid)
        if gm < 0.0:
            lo = mid
        elif gm > 0.0:
            hi = mid
        else:
            return mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class ADASCurves:
    """Point lists: ad and sras are (delta-quantity, price) pairs, lras is
    (destination level, price) pairs along the general-equilibrium locus."""

    ad: np.ndarray
    sras: np.ndarray
    lras: np.ndarray


def adas_curves(
    n0: float,
    s0: float,
    k_a: float,
    n_ref: float,
    s_ref: float,
    delta_n,
    delta_s,
    s_values=None,
) -> ADASCurves:
    """Aggregate demand / aggregate supply curve families.

    AD:   P = (n0/(k_a*s_ref)) * exp(-k_a*delta_n/n0)       (falls in delta_n)
    SRAS: P = (n_ref/(k_a*s0)) * exp(+delta_s/(k_a*s0))     (rises in delta_s)
    LRAS: the general-equilibrium price locus P ~ S**(k_a-1), emitted over
    s_values (default: a geometric sweep around s_ref).
    """
    for label, value in (("n0", n0), ("s0", s0), ("k_a", k_a), ("n_ref", n_ref), ("s_ref", s_ref)):
        _positive_scalar(value, label)
    delta_n = np.asarray(delta_n, dtype=float)
    delta_s = np.asarray(delta_s, dtype=float)
    p_ad = (n0 / (k_a * s_ref)) * np.exp(-k_a * delta_n / n0)
    p_sras = (n_ref / (k_a * s0)) * np.exp(delta_s / (k_a * s0))
    if s_values is None:
        s_values = s_ref * np.geomspace(0.5, 2.0, 41)
    s_values = np.asarray(s_values, dtype=float)
    p_lras = ge_price(IERelation(k=k_a, d_ref=n_ref, s_ref=s_ref), s_values)
    return ADASCurves(
        ad=np.column_stack([delta_n, p_ad]),
        sras=np.column_stack([delta_s, p_sras]),
        lras=np.column_stack([s_values, np.atleast_1d(p_lras)]),
    )


def adas_equilibrium(
    n0: float,
    s0: float,
    k_a: float,
    n_ref: float,
    s_ref: float,
    supply_shift: float = 0.0,
    tol: float = 1e-10,
) -> tuple[float, float]:
    """Crossing of AD with a (possibly shifted) SRAS in the shared
    delta-quantity coordinate. Returns (delta*, price*).

    A positive supply_shift moves SRAS right, lowering the equilibrium
    price. Solved by bisection on the log-transformed curves.
    """

    def gap(x):
        log_ad = math.log(n0 / (k_a * s_ref)) - k_a * x / n0
        log_sras = math.log(n_ref / (k_a * s0)) + (x - supply_shift) / (k_a * s0)
        return log_sras - log_ad  # increasing in x

    x_star = _bisect_root(gap, 0.0, tol=tol)
    price = (n0 / (k_a * s_ref)) * math.exp(-k_a * x_star / n0)
    return x_star, price


@dataclass(frozen=True)
class ISLMCurves:
    """Point lists: lm holds (delta_m, rate) pairs, is_curve (delta_n, rate)."""

    lm: np.ndarray
    is_curve: np.ndarray


def islm_curves(
    n0: float,
    shift: CurveShift,
    m_ref: float,
    s_ref: float,
    k_p: float,
    k_s: float,
    k_i: float,
    sweep,
) -> ISLMCurves:
    """IS and LM curve families in rate space.

    LM (money market, swept over delta_m with the source shifted):
        i**k_i = ((n0+dn)/(k_p*m_ref)) * exp(-k_p*(delta_m+dm)/(n0+dn))
    IS (goods market, swept over delta_n):
        i**k_i = (n0/(k_s*s_ref)) * exp(-k_s*delta_n/n0)
    where dn = shift.delta_n and dm = shift.delta_m.
    """
    for label, value in (("n0", n0), ("m_ref", m_ref), ("s_ref", s_ref)):
        _positive_scalar(value, label)
    for label, value in (("k_p", k_p), ("k_s", k_s), ("k_i", k_i)):
        _positive_scalar(value, label)
    n_eff = n0 + shift.delta_n
    if n_eff <= 0.0:
        raise ModelDomainError("shifted source n0 + delta_n must stay positive")
    sweep = np.asarray(sweep, dtype=float)
    lm_pow = (n_eff / (k_p * m_ref)) * np.exp(-k_p * (sweep + shift.delta_m) / n_eff)
    is_pow = (n0 / (k_s * s_ref)) * np.exp(-k_s * sweep / n0)
    lm_rate = lm_pow ** (1.0 / k_i)
    is_rate = is_pow ** (1.0 / k_i)
    return ISLMCurves(
        lm=np.column_stack([sweep, lm_rate]),
        is_curve=np.column_stack([sweep, is_rate]),
    )


def islm_equilibrium(
    n0: float,
    m_ref: float,
    s_ref: float,
    k_p: float,
    k_s: float,
    k_i: float,
    delta_m: float = 0.0,
    is_shift: float = 0.0,
    tol: float = 1e-10,
) -> tuple[float, float]:
    """IS-LM crossing in the (delta_n, rate) plane. Returns (delta_n*, i*).

    The LM side rises with delta_n, the IS side falls, so the crossing is
    unique; is_shift translates the IS curve to trace out shifted
    equilibria. delta_n is parameterized as n0*(e**u - 1) so the shifted
    total n0 + delta_n stays positive during bracketing.
    """

    log_n0 = math.log(n0)

    def gap(u):
        # n0 + delta_n = n0*e**u; numpy exp saturates to inf instead of raising,
        # so huge brackets during expansion stay well defined
        with np.errstate(over="ignore"):
            x = n0 * float(np.expm1(u))
            inv_n_eff = float(np.exp(-u)) / n0
        log_lm = log_n0 + u - math.log(k_p * m_ref) - k_p * delta_m * inv_n_eff
        log_is = math.log(n0 / (k_s * s_ref)) - k_s * (x - is_shift) / n0
        return log_lm - log_is  # increasing in u

    u_star = _bisect_root(gap, 0.0, tol=tol)
    x_star = n0 * math.expm1(u_star)
    n_eff = n0 + x_star
    i_star = ((n_eff / (k_p * m_ref)) * math.exp(-k_p * delta_m / n_eff)) ** (1.0 / k_i)
    return x_star, i_star


def money_mediation(k: float, k_s: float) -> float:
    """Index of N->S mediated through money: k_n = k/k_s.

    If N->M carries index k and S->M carries index k_s then the implied
    N->S relation carries k/k_s.
    """
    _positive_scalar(k, "k")
    _positive_scalar(k_s, "k_s")
    return k / k_s


def output_investment_relation(
    n_ref: float, i_ref: float, eta: float = 1.0
) -> IERelation:
    """Output <-> investment market N = n_ref*(I/i_ref)**eta (default eta 1)."""
    return IERelation(k=eta, d_ref=n_ref, s_ref=i_ref)


def ridge_sigma(kappa: float, gamma: float) -> float:
    """Ridge line of the price-level surface.

    With kappa = 1/k and sigma = M/m0, the price along fixed N is
    stationary at sigma = gamma * exp(-(kappa + log gamma)/kappa), where
    gamma is the common log scale divided by m0. Returns that sigma.
    """
    _positive_scalar(kappa, "kappa")
    _positive_scalar(gamma, "gamma")
    return gamma * math.exp(-(kappa + math.log(gamma)) / kappa)
