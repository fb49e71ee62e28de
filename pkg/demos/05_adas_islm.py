"""Aggregate curve families and their crossings.

Both diagram families come out of the same relation machinery. The
AD/AS diagram pairs a falling aggregate-demand curve with a rising
short-run supply curve in (output shift, price) space, plus a vertical
long-run locus. The IS/LM diagram pairs two rate curves in (output
shift, interest rate) space. Equilibria are found numerically and
respond to money and spending shifts the way the textbook arrows say.
"""

import numpy as np

from infoeq import (
    CurveShift,
    adas_curves,
    adas_equilibrium,
    islm_curves,
    islm_equilibrium,
)

N0, S0, K_A = 1000.0, 900.0, 1.4
N_REF, S_REF = 950.0, 880.0

sweep = np.linspace(-40.0, 40.0, 5)
curves = adas_curves(N0, S0, K_A, N_REF, S_REF, delta_n=sweep, delta_s=sweep)
print("output shift      AD price   SRAS price")
for x, ad, sras in zip(sweep, curves.ad[:, 1], curves.sras[:, 1]):
    print(f"  {x:+7.1f}        {ad:8.4f}   {sras:8.4f}")

x0, p0 = adas_equilibrium(N0, S0, K_A, N_REF, S_REF)
x1, p1 = adas_equilibrium(N0, S0, K_A, N_REF, S_REF, supply_shift=25.0)
print(f"\nbaseline crossing: output shift {x0:+.2f}, price {p0:.4f}")
print(f"supply pushed out by 25: shift {x1:+.2f}, price {p1:.4f}"
      f"  (more output, cheaper)")

N0, M_REF, S_REF = 1000.0, 450.0, 700.0
K_P, K_S, K_I = 2.0, 1.3, 2.6

# lm pairs the sweep with money shifts, is_curve with output shifts
sweep = np.linspace(-30.0, 30.0, 5)
curves = islm_curves(N0, CurveShift(), M_REF, S_REF, K_P, K_S, K_I, sweep)
print("\nshift        LM rate (vs money)   IS rate (vs output)")
for x, lm, is_r in zip(sweep, curves.lm[:, 1], curves.is_curve[:, 1]):
    print(f"  {x:+7.1f}        {lm:7.4f}              {is_r:7.4f}")

x0, i0 = islm_equilibrium(N0, M_REF, S_REF, K_P, K_S, K_I)
x_m, i_m = islm_equilibrium(N0, M_REF, S_REF, K_P, K_S, K_I, delta_m=15.0)
x_f, i_f = islm_equilibrium(N0, M_REF, S_REF, K_P, K_S, K_I, is_shift=20.0)
print(f"\nbaseline:          output shift {x0:+.2f}, rate {i0:.4f}")
print(f"money +15:         output shift {x_m:+.2f}, rate {i_m:.4f}"
      f"  (easier money, lower rate, more output)")
print(f"spending +20:      output shift {x_f:+.2f}, rate {i_f:.4f}"
      f"  (fiscal push, higher rate and output)")
