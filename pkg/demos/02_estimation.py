"""Fitting a zero-and-one-inflated sample: ML vs moments, standard errors,
and the delta method for the mean and variance of y.

Run: python demos/02_estimation.py
"""
from inflbeta import BeinfParams, delta_method_var, fisher_info, fit, make_rng, mean_var, sample

truth = BeinfParams.of(0.2, 0.3, 0.1, 2.0)
y = sample(truth, make_rng(2024), 500)
print(f"n = {y.size}: {(y == 0).sum()} zeros, {(y == 1).sum()} ones")

ml = fit(y, "beinf")
cm = fit(y, "beinf", method="cm")
print(f"{'':6}{'truth':>8}{'ML':>10}{'se':>9}{'CM':>10}")
for k, v in zip(("alpha", "gamma", "mu", "phi"), (0.2, 0.3, 0.1, 2.0)):
    print(f"{k:6}{v:8.3f}{ml.estimates[k]:10.4f}{ml.se[k]:9.4f}{cm.estimates[k]:10.4f}")
print("ML status:", ml.status, "after", ml.iterations, "iterations")

# alpha is orthogonal to (mu, phi): its block of the information is diagonal
print("information at the truth:\n", fisher_info(truth).matrix.round(3))

# delta-method standard errors for E(y) and Var(y) at the fitted point
for target, value in zip(("mean", "variance"), mean_var(ml.params)):
    se = (delta_method_var(ml.params, target) / y.size) ** 0.5
    print(f"{target}: {value:.4f} +/- {se:.4f}")

# the boundary proportions as free parameters
d = fit(y, "beinf", parameterization="delta")
print("delta0, delta1 =", d.estimates["delta0"], d.estimates["delta1"])
