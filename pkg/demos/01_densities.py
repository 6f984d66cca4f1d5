"""Densities, atoms, moments and the exponential-family form.

Run: python demos/01_densities.py
"""
import numpy as np

from inflbeta import BeinfParams, InflParams, canonical_form, cdf, cdf_left, make_rng, mean_var, pdf, sample

bezi = InflParams.bezi(0.2, 0.1, 2.0)     # 20% exact zeros, beta(0.2, 1.8) otherwise
beinf = BeinfParams.of(0.2, 0.3, 0.1, 2.0)  # 20% on the boundary, 30% of that at one

# the boundary values carry probability, the interior carries a density
print("BEZI  P(y=0) =", pdf(0.0, bezi), " f(0.5) =", round(pdf(0.5, bezi), 6))
print("BEINF P(y=0) =", pdf(0.0, beinf), " P(y=1) =", pdf(1.0, beinf))

# the CDF jumps at the atoms: compare F(0-) with F(0), F(1-) with F(1)
print("BEINF jumps:", cdf_left(0.0, beinf), "->", cdf(0.0, beinf), "and",
      round(cdf_left(1.0, beinf), 6), "->", cdf(1.0, beinf))

# closed-form mean and variance against a large simulated sample
for p in (bezi, beinf):
    y = sample(p, make_rng(1), 200_000)
    m, v = mean_var(p)
    print(f"{p.family.name}: E = {m:.4f} (sim {y.mean():.4f}), Var = {v:.4f} (sim {y.var():.4f})")

# the same law written as exp(eta @ T(y) - B(eta)) h(y)
can = canonical_form(beinf)
print("natural parameters:", np.round(can.eta, 4))
for y in (0.0, 0.25, 1.0):
    print(f"  y={y}: canonical {can.density(y):.6f}  direct {pdf(y, beinf):.6f}")
