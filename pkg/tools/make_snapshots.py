"""Regenerate the bundled CSV snapshots in src/infoeq/data/.

The bundled series are synthetic stand-ins shaped like the familiar US
macro aggregates (quarterly nominal output, monthly currency and base,
core deflators, treasury rates, hours, capital stock). They are built
from smooth trend profiles plus seeded AR(1) wiggle and recession
pulses, anchored to round historical magnitudes, and the price and rate
series are generated from the package's own models plus noise so that
fits against them are well posed. Tests assert only structural facts
about these files (spans, frequencies, positivity, sign counts), never
exact values, so regenerating with a different seed only requires
rerunning this script.

Run from a source checkout: python tools/make_snapshots.py
"""

from __future__ import annotations

import datetime as dt
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from infoeq.macro import InterestParams, PriceLevelParams, interest_rate, k_index, price_level
from infoeq.timeseries import decimal_year

OUT = Path(__file__).resolve().parents[1] / "src" / "infoeq" / "data"

US = PriceLevelParams(alpha=0.641, gamma=5.93e-4, m0=603.8)
RATES = InterestParams(k_i=3.49, k_p=0.124)

RNG = np.random.default_rng(16180339)


def quarterly(y0: int, y1: int) -> list[dt.date]:
    return [dt.date(y, m, 1) for y in range(y0, y1 + 1) for m in (1, 4, 7, 10)]


def monthly(y0: int, m0: int, y1: int, m1: int) -> list[dt.date]:
    out = []
    y, m = y0, m0
    while (y, m) <= (y1, m1):
        out.append(dt.date(y, m, 1))
        y, m = (y + 1, 1) if m == 12 else (y, m + 1)
    return out


def annual(y0: int, y1: int) -> list[dt.date]:
    return [dt.date(y, 1, 1) for y in range(y0, y1 + 1)]


def years(dates: list[dt.date]) -> np.ndarray:
    return np.array([decimal_year(d) for d in dates])


def ar1(n: int, sigma: float, phi: float) -> np.ndarray:
    eps = RNG.normal(0.0, sigma, size=n)
    out = np.empty(n)
    acc = 0.0
    for i in range(n):
        acc = phi * acc + eps[i]
        out[i] = acc
    return out


def profile(t: np.ndarray, knots: list[tuple[float, float]]) -> np.ndarray:
    xs = np.array([k[0] for k in knots])
    ys = np.array([k[1] for k in knots])
    return np.interp(t, xs, ys)


def pulses(t: np.ndarray, spec: list[tuple[float, float, float]]) -> np.ndarray:
    out = np.zeros_like(t)
    for center, width, depth in spec:
        out += depth * np.exp(-(((t - center) / width) ** 2))
    return out


def integrate(t: np.ndarray, rate: np.ndarray, wiggle: np.ndarray) -> np.ndarray:
    logv = np.zeros_like(t)
    for i in range(1, t.size):
        step = t[i] - t[i - 1]
        logv[i] = logv[i - 1] + (rate[i] + wiggle[i]) * step
    return logv


def anchor(t, logv, ta, va, tb, vb):
    """Affine-correct a log path so it passes through two anchors."""
    la = np.interp(ta, t, logv)
    lb = np.interp(tb, t, logv)
    slope = ((np.log(vb) - lb) - (np.log(va) - la)) / (tb - ta)
    return logv + (np.log(va) - la) + slope * (t - ta)


def write_csv(name: str, dates: list[dt.date], values: np.ndarray) -> None:
    path = OUT / name
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("date,value\n")
        for d, v in zip(dates, values):
            fh.write(f"{d.isoformat()},{v:.4f}\n")
    print(f"{name}: {len(dates)} rows, {values[0]:.2f} .. {values[-1]:.2f}")


RECESSIONS = [
    (1949.0, 0.5, -0.14),
    (1953.9, 0.35, -0.10),
    (1957.9, 0.35, -0.12),
    (1960.4, 0.3, -0.08),
    (1970.0, 0.3, -0.06),
    (1974.5, 0.6, -0.08),
    (1980.3, 0.3, -0.10),
    (1982.0, 0.6, -0.09),
    (1990.9, 0.3, -0.05),
    (2001.3, 0.3, -0.03),
    (2008.9, 0.5, -0.12),
]

OUTPUT_GROWTH = [
    (1947.0, 0.062),
    (1955.0, 0.058),
    (1965.0, 0.072),
    (1975.0, 0.098),
    (1982.0, 0.083),
    (1990.0, 0.058),
    (2000.0, 0.049),
    (2007.0, 0.045),
    (2009.0, 0.020),
    (2015.9, 0.038),
]

CURRENCY_GROWTH = [
    (1947.0, 0.040),
    (1960.0, 0.050),
    (1970.0, 0.065),
    (1980.0, 0.080),
    (1990.0, 0.075),
    (1995.0, 0.080),
    (2000.0, 0.060),
    (2005.0, 0.050),
    (2009.0, 0.065),
    (2015.9, 0.070),
]

RESERVE_SHARE = [
    (1947.0, 0.95),
    (1955.0, 0.70),
    (1965.0, 0.45),
    (1975.0, 0.32),
    (1985.0, 0.22),
    (1995.0, 0.14),
    (2007.0, 0.09),
    (2015.9, 0.08),
]

CAPITAL_GROWTH = [
    (1950.0, 0.048),
    (1960.0, 0.042),
    (1970.0, 0.043),
    (1980.0, 0.036),
    (1990.0, 0.030),
    (2000.0, 0.031),
    (2008.0, 0.022),
    (2011.0, 0.015),
]


def logistic(x: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-x))


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    # nominal output, quarterly
    q_dates = quarterly(1947, 2015)
    tq = years(q_dates)
    rate = profile(tq, OUTPUT_GROWTH) + pulses(tq, RECESSIONS)
    log_n = integrate(tq, rate, ar1(tq.size, 0.012, 0.3))
    log_n = anchor(tq, log_n, 1947.0, 243.1, 2010.0, 14964.4)
    n_q = np.exp(log_n)
    negatives = int(np.sum(np.diff(log_n) < 0))
    assert negatives >= 8, negatives
    write_csv("gdp.csv", q_dates, n_q)

    # currency in circulation, monthly
    m_dates = monthly(1947, 1, 2015, 12)
    tm = years(m_dates)
    log_m = integrate(tm, profile(tm, CURRENCY_GROWTH), ar1(tm.size, 0.004, 0.5))
    log_m = anchor(tm, log_m, 1947.0, 26.3, 2011.0, 915.0)
    m_cur = np.exp(log_m)
    write_csv("mbcurrcir.csv", m_dates, m_cur)

    # full monetary base: currency plus reserves, plus three QE steps
    qe = (
        900.0 * logistic((tm - 2008.85) / 0.15)
        + 550.0 * logistic((tm - 2010.9) / 0.25)
        + 1700.0 * logistic((tm - 2013.3) / 0.7)
    )
    base = m_cur * (1.0 + profile(tm, RESERVE_SHARE)) + qe
    base = base * np.exp(ar1(tm.size, 0.004, 0.5))
    write_csv("ambsl.csv", m_dates, base)

    # model price level on the monthly grid drives both deflators
    n_m = np.exp(np.interp(tm, tq, log_n))
    p_m = price_level(n_m, m_cur, US)

    pce_dates = monthly(1959, 1, 2015, 12)
    sel = np.isin(tm, years(pce_dates))
    pce = p_m[sel] * np.exp(ar1(int(sel.sum()), 0.003, 0.8))
    t_pce = tm[sel]
    # keep the 2009=100 rebase factor: the reference alpha below must
    # describe the shipped index, not the raw model level
    c_pce = 100.0 / np.mean(pce[(t_pce >= 2009.0) & (t_pce < 2010.0)])
    pce = c_pce * pce
    write_csv("pcepilfe.csv", pce_dates, pce)

    cpi_dates = monthly(1957, 1, 2015, 12)
    sel = np.isin(tm, years(cpi_dates))
    t_cpi = tm[sel]
    cpi = p_m[sel] * np.exp(0.0015 * (t_cpi - 1983.0)) * np.exp(ar1(int(sel.sum()), 0.004, 0.8))
    cpi = 100.0 * cpi / np.mean(cpi[(t_cpi >= 1982.0) & (t_cpi < 1985.0)])
    write_csv("cpilfesl.csv", cpi_dates, cpi)

    # treasury rates from the rate model, with the early-80s hump and a
    # floor regime at each end (pegged 40s, near-zero after 2009)
    gs_dates = monthly(1953, 4, 2015, 12)
    sel = np.isin(tm, years(gs_dates))
    t_gs = tm[sel]
    long_rate = interest_rate(n_m[sel], m_cur[sel], RATES)
    long_rate = long_rate * np.exp(1.05 * np.exp(-(((t_gs - 1981.2) / 4.2) ** 2)))
    long_rate = long_rate * np.exp(ar1(t_gs.size, 0.05, 0.85))
    write_csv("gs10.csv", gs_dates, long_rate)

    short_rate = interest_rate(n_m, base, RATES)
    short_rate = short_rate * np.exp(0.9 * np.exp(-(((tm - 1980.8) / 4.0) ** 2)))
    short_rate = short_rate * np.exp(-0.9 * np.exp(-(((tm - 1947.0) / 3.0) ** 2)))
    short_rate = short_rate * np.exp(-1.3 * logistic((tm - 2009.2) / 0.3))
    short_rate = short_rate * np.exp(ar1(tm.size, 0.09, 0.8))
    write_csv("tb3ms.csv", m_dates, short_rate)

    # hours index consistent with output over price, rebased to 2009
    p_q = np.exp(np.interp(tq, tm, np.log(p_m)))
    hours = (n_q / p_q) * np.exp(ar1(tq.size, 0.005, 0.5))
    hours = 100.0 * hours / np.mean(hours[(tq >= 2009.0) & (tq < 2010.0)])
    write_csv("hours.csv", q_dates, hours)

    # real capital stock, annual, very smooth
    k_dates = annual(1950, 2011)
    tk = years(k_dates)
    log_k = integrate(tk, profile(tk, CAPITAL_GROWTH), ar1(tk.size, 0.002, 0.5))
    log_k = log_k + (np.log(55000.0) - log_k[-1])
    capital = np.exp(log_k)
    write_csv("rknanpusa.csv", k_dates, capital)

    # reference parameter file used by the demos; all values describe the
    # series as shipped (the deflator column, not the raw model level)
    grid = np.arange(1960.0, 2012.0)
    n_g = np.exp(np.interp(grid, tq, log_n))
    p_g = np.exp(np.interp(grid, t_pce, np.log(pce)))
    h_g = np.exp(np.interp(grid, tq, np.log(hours)))
    k_g = np.exp(np.interp(grid, tk, log_k))
    k_h = float(np.mean(n_g / (p_g * h_g)))
    design = np.column_stack([np.ones_like(grid), np.log(k_g), np.log(h_g)])
    beta, *_ = np.linalg.lstsq(design, np.log(n_g), rcond=None)
    with open(OUT / "us_params.txt", "w", encoding="utf-8") as fh:
        fh.write("# reference parameters for the bundled snapshot series\n")
        fh.write(f"alpha = {float(US.alpha * c_pce)!r}\n")
        fh.write(f"gamma = {US.gamma!r}\n")
        fh.write(f"M0 = {US.m0!r}\n")
        fh.write(f"k_i = {RATES.k_i!r}\n")
        fh.write(f"k_p = {RATES.k_p!r}\n")
        fh.write(f"k_H = {k_h!r}\n")
        fh.write(f"A = {float(np.exp(beta[0]))!r}\n")
        fh.write(f"k1 = {float(beta[1])!r}\n")
        fh.write(f"k2 = {float(beta[2])!r}\n")
    print(f"us_params.txt: k_H={k_h:.3f}, A={np.exp(beta[0]):.4g}, k1={beta[1]:.3f}, k2={beta[2]:.3f}")

    k_start = k_index(n_q[0], float(np.interp(tq[0], tm, m_cur)), US)
    k_end = k_index(n_q[-1], float(np.interp(tq[-1], tm, m_cur)), US)
    print(f"k_index: {k_start:.3f} (1947) -> {k_end:.3f} (2015), negatives in log output: {negatives}")


if __name__ == "__main__":
    main()
