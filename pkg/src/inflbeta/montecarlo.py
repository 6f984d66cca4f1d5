"""Monte Carlo study of the ML and conditional-moment (CM) estimators.

Each replication draws a sample from a generator keyed by ``(seed, n, rep)``,
so results do not depend on execution order or on how replications are split
across worker processes. Replications where an estimator is infeasible are
counted in ``skipped`` and left out of that estimator's aggregates:

* CM: fewer than two interior points or an inadmissible moment solution;
* ML: fewer than two interior points or a BFGS run that did not converge;
* targets that plug in alpha-hat or gamma-hat (``gamma``, ``mean``, ``var``)
  when alpha-hat is 0 or 1.

The ``alpha`` row is a diagnostic and always uses every replication.
"""
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .beta import substream
from .errors import EstimationError
from .estimation import BoundaryWarning, cm_mu_phi, mle_gamma, mle_mu_phi, sufficient_stats
from .inflated import BeinfParams, Family, InflParams, mean_var, sample

__all__ = ["StudyConfig", "StudyRow", "run_study", "replicate_estimates", "preset", "DEFAULT_SIZES",
           "truth"]

DEFAULT_SIZES = (10, 20, 50, 100, 500, 1000)
ESTIMATORS = ("cm", "ml")
_ML_ONLY = ("alpha", "gamma")


@dataclass(frozen=True)
class StudyConfig:
    params: object
    sizes: tuple = DEFAULT_SIZES
    replications: int = 5000
    seed: int = 0
    targets: tuple = None

    def __post_init__(self):
        if not isinstance(self.params, (InflParams, BeinfParams)):
            raise TypeError("params must be InflParams or BeinfParams")
        if self.replications < 1:
            raise ValueError("replications must be at least 1")
        if not self.sizes or any(int(n) != n or n < 1 for n in self.sizes):
            raise ValueError(f"sizes must be positive integers, got {self.sizes!r}")
        object.__setattr__(self, "sizes", tuple(int(n) for n in self.sizes))
        if self.targets is None:
            object.__setattr__(self, "targets", default_targets(self.family))
        unknown = set(self.targets) - set(default_targets(self.family))
        if unknown:
            raise ValueError(f"unknown targets for {self.family.name}: {sorted(unknown)}")

    @property
    def family(self):
        return self.params.family


@dataclass(frozen=True)
class StudyRow:
    target: str
    n: int
    estimator: str
    mean: float
    bias: float
    rmse: float
    skipped: int


def default_targets(family):
    if family is Family.BEINF:
        return ("gamma", "mu", "phi", "mean", "var", "alpha")
    return ("mu", "phi", "mean", "var", "alpha")


def preset(name, sizes=DEFAULT_SIZES, replications=5000, seed=0):
    """The two published designs: ``table1`` (BEZI) and ``table2`` (BEINF)."""
    if name == "table1":
        params = InflParams.bezi(0.2, 0.1, 2.0)
    elif name == "table2":
        params = BeinfParams.of(0.2, 0.3, 0.1, 2.0)
    else:
        raise ValueError(f"unknown preset {name!r}; expected 'table1' or 'table2'")
    return StudyConfig(params, tuple(sizes), replications, seed)


def truth(params):
    m, v = mean_var(params)
    out = {"alpha": params.alpha, "mu": params.beta.mu, "phi": params.beta.phi,
           "mean": m, "var": v}
    if isinstance(params, BeinfParams):
        out["gamma"] = params.gamma
    return out


def _plugin(params, alpha, gamma, mu, phi):
    # Mixture of a point-mass part (mean m0, variance v0) and B(mu, phi);
    # written out because gamma-hat may sit on the boundary.
    if isinstance(params, InflParams):
        m0, v0 = params.c, 0.0
    else:
        m0, v0 = gamma, gamma * (1.0 - gamma)
    mean = alpha * m0 + (1.0 - alpha) * mu
    var = (alpha * v0 + (1.0 - alpha) * mu * (1.0 - mu) / (phi + 1.0)
           + alpha * (1.0 - alpha) * (m0 - mu) ** 2)
    return mean, var


def _replicate(params, n, seed, rep):
    """Estimates for one replication as {(target, estimator): value or nan}."""
    nan = math.nan
    y = sample(params, substream(seed, n, rep), n)
    stats = sufficient_stats(y, params.family)
    out = {("alpha", "ml"): stats.t1 / n}
    alpha_ok = 0 < stats.t1 < n
    alpha = stats.t1 / n
    gamma = None
    if isinstance(params, BeinfParams):
        gamma = mle_gamma(stats) if alpha_ok else nan
        out[("gamma", "ml")] = gamma

    interior = y[(y > 0.0) & (y < 1.0)]
    try:
        cm = cm_mu_phi(interior)
    except EstimationError:
        cm = None
    try:
        mu, phi, _ = mle_mu_phi(stats, start=cm)
        ml = (mu, phi)
    except EstimationError:
        ml = None

    for name, est in (("cm", cm), ("ml", ml)):
        if est is None:
            out.update({(t, name): nan for t in ("mu", "phi", "mean", "var")})
            continue
        out[("mu", name)], out[("phi", name)] = est
        if alpha_ok:
            out[("mean", name)], out[("var", name)] = _plugin(params, alpha, gamma, *est)
        else:
            out[("mean", name)] = out[("var", name)] = nan
    return out


def _run_block(params, n, seed, reps):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryWarning)
        return [_replicate(params, n, seed, r) for r in reps]


def _columns(config):
    cols = []
    for t in config.targets:
        for e in ESTIMATORS:
            if e == "cm" and t in _ML_ONLY:
                continue
            cols.append((t, e))
    return cols


def replicate_estimates(config, n):
    """Per-replication estimates at sample size ``n``.

    Returns {(target, estimator): array over replications}, NaN where the
    replication was skipped. These are the values :func:`run_study` aggregates.
    """
    results = _run_block(config.params, n, config.seed, range(config.replications))
    return {col: np.array([r[col] for r in results], dtype=float) for col in _columns(config)}


def _aggregate(config, n, results):
    true = truth(config.params)
    rows = []
    for t, e in _columns(config):
        vals = np.array([r[(t, e)] for r in results], dtype=float)
        ok = vals[~np.isnan(vals)]
        skipped = int(vals.size - ok.size)
        if ok.size:
            err = ok - true[t]
            mean = float(ok.mean())
            bias = mean - true[t]
            rmse = math.sqrt(float(np.mean(err * err)))
        else:
            mean = bias = rmse = math.nan
        rows.append(StudyRow(t, n, e, mean, bias, rmse, skipped))
    return rows


def run_study(config, workers=1, chunk=250):
    """Run every (n, replication) cell and aggregate mean, bias and RMSE.

    Rows come out ordered by target, then n, then estimator (cm before ml).
    ``workers > 1`` spreads replications over processes; results are identical
    to the serial run.
    """
    per_n = {}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {}
            for n in config.sizes:
                blocks = [range(s, min(s + chunk, config.replications))
                          for s in range(0, config.replications, chunk)]
                futures[n] = [pool.submit(_run_block, config.params, n, config.seed, b)
                              for b in blocks]
            for n, futs in futures.items():
                per_n[n] = [r for f in futs for r in f.result()]
    else:
        for n in config.sizes:
            per_n[n] = _run_block(config.params, n, config.seed, range(config.replications))

    rows = [row for n in config.sizes for row in _aggregate(config, n, per_n[n])]
    rows.sort(key=lambda r: (config.targets.index(r.target), config.sizes.index(r.n),
                             ESTIMATORS.index(r.estimator)))
    return rows
