"""Inflated beta vs a censored normal on boundary-heavy data, judged by
the empirical CDF and the Kolmogorov-Smirnov distance.

Run: python demos/04_tobit_gof.py
"""
import math

from inflbeta import InflParams, gof_curve, make_rng, sample
from inflbeta.gof import KS_CRIT_1PCT

y = sample(InflParams.bezi(0.2, 0.1, 2.0), make_rng(11), 2000)
curve = gof_curve(y, "bezi", tobit=True, grid=11)

print(f"{'y':>5}{'ecdf':>9}{'BEZI':>9}{'Tobit':>9}")
for t, e, m, tb in zip(curve.grid, curve.ecdf, curve.model_cdf, curve.tobit_cdf):
    print(f"{t:5.1f}{e:9.4f}{m:9.4f}{tb:9.4f}")

crit = KS_CRIT_1PCT / math.sqrt(y.size)
for name, d in curve.ks.items():
    print(f"KS {name}: D = {d:.4f} ({'below' if d < crit else 'above'} the 1% value {crit:.4f})")
print("Tobit fit:", {k: round(v, 4) for k, v in curve.fits["tobit"].estimates.items()})
