"""Long and short rates from the same two aggregates.

The rate model is i = ((N/M)/k_p)**(1/k_i): the ratio of output to money
sets the rate through two constants. Long rates pair output with
currency (mbcurrcir); short rates pair it with the full monetary base
(ambsl), which balloons after 2008 and drags the model short rate to the
floor along with the observed one.
"""

import numpy as np

from infoeq import (
    bundled_params,
    bundled_series,
    interest_params,
    interest_rate,
    interp_linear,
)

gdp = bundled_series("gdp")
currency = bundled_series("mbcurrcir")
base = bundled_series("ambsl")
long_obs = bundled_series("gs10")
short_obs = bundled_series("tb3ms")
params = interest_params(bundled_params())

print(f"calibration: k_i={params.k_i}, k_p={params.k_p}\n")

marks = np.array([1955.0, 1965.0, 1975.0, 1985.0, 1995.0, 2005.0, 2014.0])
n = interp_linear(gdp, marks)

long_model = interest_rate(n, interp_linear(currency, marks), params)
short_model = interest_rate(n, interp_linear(base, marks), params)
lo = interp_linear(long_obs, marks)
so = interp_linear(short_obs, marks)

print("year   long model / observed    short model / observed")
for year, lm, l, sm, s in zip(marks, long_model, lo, short_model, so):
    print(f"{year:4.0f}      {lm:5.2f} / {l:5.2f}            {sm:5.2f} / {s:5.2f}")

# the early-80s hump and the post-2009 floor are regimes the two-constant
# model does not carry, so the residuals concentrate there
grid = np.linspace(1954.0, 2014.5, 400)
resid = interest_rate(
    interp_linear(gdp, grid), interp_linear(currency, grid), params
) - interp_linear(long_obs, grid)
worst = grid[np.argmax(np.abs(resid))]
print(f"\nlargest long-rate gap at {worst:.1f}: {resid[np.argmax(np.abs(resid))]:+.2f} points")
print(f"rms long-rate gap: {float(np.sqrt(np.mean(resid**2))):.2f} points")
