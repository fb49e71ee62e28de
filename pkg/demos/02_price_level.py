"""Price level and inflation from output and currency.

The bundled snapshots play the role of the usual US aggregates: nominal
output (gdp), currency in circulation (mbcurrcir), and a core deflator
(pcepilfe). The price-level model ties them together through a slowly
falling index k(N, M), and its log growth is the model inflation rate.
"""

import numpy as np

from infoeq import (
    bundled_params,
    bundled_series,
    growth_relations,
    inflation_model,
    interp_linear,
    k_index,
    log_growth,
    price_level,
    price_level_params,
)

gdp = bundled_series("gdp")
money = bundled_series("mbcurrcir")
deflator = bundled_series("pcepilfe")
params = price_level_params(bundled_params())

decades = np.arange(1960.0, 2015.0, 10.0)
n = interp_linear(gdp, decades)
m = interp_linear(money, decades)
p_obs = interp_linear(deflator, decades)
k = k_index(n, m, params)
p_model = price_level(n, m, params)

print("year   k(N,M)   model P   observed P   error")
for row in zip(decades, k, p_model, p_obs):
    year, ki, pm, po = row
    print(f"{year:4.0f}   {ki:.4f}   {pm:7.2f}   {po:10.2f}   {pm / po - 1.0:+7.2%}")

# the index drifts down as the economy grows against the currency stock,
# which is why a fixed-k quantity theory overstates late-sample inflation
grid = np.linspace(1962.0, 2013.0, 200)
model_pi = inflation_model(gdp, money, params, grid)
observed_pi = interp_linear(log_growth(deflator), grid)
m_growth = interp_linear(log_growth(money), grid)
k_mid = k_index(interp_linear(gdp, grid), interp_linear(money, grid), params)
fixed_pi, _ = growth_relations(np.mean(k_mid), np.mean(m_growth))

print(f"\nmean inflation 1962-2013:")
print(f"  model          {np.mean(model_pi.v):.4f} /yr")
print(f"  observed       {np.mean(observed_pi):.4f} /yr")
print(f"  fixed-k rule   {fixed_pi:.4f} /yr  (k frozen at its mean {np.mean(k_mid):.3f})")
print(f"\nindex path: k={k[0]:.3f} in {decades[0]:.0f} down to k={k[-1]:.3f} in {decades[-1]:.0f}")
