"""Empirical distribution function, fitted-CDF overlays and the KS distance."""
from dataclasses import dataclass, field

import numpy as np

from .errors import DataError, DomainError
from .estimation import fit
from .inflated import Family, cdf, cdf_left
from .tobit import Censoring, tobit_cdf, tobit_cdf_left, tobit_fit

__all__ = ["ecdf", "ks_statistic", "GofCurve", "gof_curve", "tobit_censoring_for",
           "KS_CRIT_1PCT"]

# Asymptotic 1% critical value of sqrt(n) * D_n.
KS_CRIT_1PCT = 1.63


def _clean(sample):
    y = np.asarray(sample, dtype=float).ravel()
    if y.size == 0:
        raise DataError("sample is empty")
    if np.isnan(y).any():
        i = int(np.argmax(np.isnan(y)))
        raise DataError(f"value at index {i} is NaN", index=i)
    return y


def ecdf(sample, t):
    """Right-continuous empirical CDF of ``sample`` evaluated at ``t``."""
    y = np.sort(_clean(sample))
    return np.searchsorted(y, np.asarray(t, dtype=float), side="right") / y.size


def ks_statistic(sample, model_cdf, model_cdf_left):
    """sup_t |F_n(t) - F(t)| for a model F that may have atoms.

    Between consecutive distinct data points F_n is flat and F is
    nondecreasing, so the supremum is attained either at a data point (using
    F) or just below one (using the left limits of both functions).
    """
    y = np.sort(_clean(sample))
    xs, counts = np.unique(y, return_counts=True)
    upper = np.cumsum(counts) / y.size
    lower = upper - counts / y.size
    f = np.array([model_cdf(float(x)) for x in xs])
    f_left = np.array([model_cdf_left(float(x)) for x in xs])
    return float(max(np.max(np.abs(upper - f)), np.max(np.abs(lower - f_left))))


def tobit_censoring_for(sample, family):
    """Left censoring for BEZI data without ones, double censoring otherwise."""
    y = np.asarray(sample, dtype=float)
    if Family(family) is Family.BEZI and not (y == 1.0).any():
        return Censoring.LEFT
    return Censoring.DOUBLE


@dataclass
class GofCurve:
    grid: np.ndarray
    ecdf: np.ndarray
    model_cdf: np.ndarray
    ks: dict
    fits: dict
    tobit_cdf: np.ndarray = field(default=None)

    @property
    def columns(self):
        cols = {"y": self.grid, "ecdf": self.ecdf, "model_cdf": self.model_cdf}
        if self.tobit_cdf is not None:
            cols["tobit_cdf"] = self.tobit_cdf
        return cols


def gof_curve(sample, family, tobit=False, grid=512, method="ml"):
    """Fit ``family`` (and optionally the matching Tobit model) and tabulate
    the empirical and fitted CDFs on a uniform grid over [0, 1].

    The grid includes both endpoints, so the boundary atoms show up as the
    values at 0 and 1.
    """
    if int(grid) != grid or grid < 2:
        raise DomainError(f"grid must be an integer >= 2, got {grid!r}")
    y = _clean(sample)
    t = np.linspace(0.0, 1.0, int(grid))
    report = fit(y, family, method=method)
    p = report.params
    fits = {"model": report}
    ks = {"model": ks_statistic(y, lambda x: cdf(x, p), lambda x: cdf_left(x, p))}
    curve = GofCurve(grid=t, ecdf=ecdf(y, t), model_cdf=np.array([cdf(x, p) for x in t]),
                     ks=ks, fits=fits)
    if tobit:
        tr = tobit_fit(y, tobit_censoring_for(y, family))
        tp = tr.params
        fits["tobit"] = tr
        ks["tobit"] = ks_statistic(y, lambda x: tobit_cdf(x, tp), lambda x: tobit_cdf_left(x, tp))
        curve.tobit_cdf = np.array([tobit_cdf(x, tp) for x in t])
    return curve
