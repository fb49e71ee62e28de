"""Tour of the relation algebra.

A relation ties a source quantity D to a destination quantity S through
dD/dS = k * D/S. Solving it in general equilibrium gives the power law
D = d_ref * (s/s_ref)**k and an abstract price P = dD/dS. Holding one
side fixed gives demand and supply curves. Relations also invert and
compose like the functions they represent, and a brute-force ODE
integrator is available to cross-check any closed form.
"""

import numpy as np

from infoeq import (
    IERelation,
    compose,
    demand_curve,
    elasticities,
    ge_price,
    ge_source,
    invert,
    linearize,
    ode_oracle,
    supply_curve,
)

rel = IERelation(k=1.7, d_ref=3.0, s_ref=2.0)
print(f"relation: k={rel.k}, d_ref={rel.d_ref}, s_ref={rel.s_ref}")

print("\ngeneral equilibrium along s:")
for s in (1.0, 2.0, 4.0, 8.0):
    d = ge_source(rel, s)
    p = ge_price(rel, s)
    check = ode_oracle(rel, s)
    print(f"  s={s:4.1f}  D={d:8.4f}  P={p:8.4f}  ode check {abs(check - d) / d:.1e}")

# holding source spending constant traces a falling demand curve;
# holding the destination level constant traces a rising supply curve
print("\npartial equilibrium (d0=2.5 demand, s0=1.8 supply):")
s_sweep = np.linspace(1.4, 2.8, 5)
price_d, delta_d = demand_curve(rel, 2.5, s_sweep)
for dd, p in zip(delta_d, price_d):
    print(f"  demand  delta_d={dd:+.3f}  P={p:.4f}")
d_sweep = np.linspace(2.2, 4.2, 5)
price_s, delta_s = supply_curve(rel, 1.8, d_sweep)
for ds, p in zip(delta_s, price_s):
    print(f"  supply  delta_s={ds:+.3f}  P={p:.4f}")

lin = linearize(rel, 2.5, 1.8)
e_d, e_s = elasticities(rel, 2.5, 1.8)
print(f"\nlinearized: D ~ {lin.alpha:.3f} - {lin.beta:.3f} P,"
      f"  S ~ {lin.gamma:.3f} + {lin.delta:.3f} P")
print(f"elasticities: demand {e_d:.3f}, supply {e_s:.3f}")

# invert swaps the two roles; composing through a shared middle quantity
# multiplies the indices
inv = invert(rel)
print(f"\ninverted: k={inv.k:.6f}, refs swapped ->"
      f" ({inv.d_ref}, {inv.s_ref}); double inversion exact:"
      f" {invert(inv) == rel}")

mid = IERelation(k=0.8, d_ref=rel.s_ref, s_ref=5.0)
chain = compose(rel, mid)
s = 6.5
print(f"composed index {chain.k:.4f} = {rel.k} * {mid.k};"
      f" chained value {ge_source(chain, s):.6f}"
      f" vs nested {ge_source(rel, ge_source(mid, s)):.6f}")
