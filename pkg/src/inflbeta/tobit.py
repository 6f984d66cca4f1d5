"""Censored-normal (Tobit) comparator models for data on [0, 1].

The latent variable is N(mu, sigma^2). ``LEFT`` censors it at 0 only;
``DOUBLE`` censors at 0 and at 1.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DataError, DomainError, OptimizationError, SupportError
from .estimation import FitReport
from .optimize import ObjectiveProblem, maximize
from .special import log_std_normal_cdf, std_normal_cdf

__all__ = ["Censoring", "TobitParams", "tobit_loglik", "tobit_fit", "tobit_cdf", "tobit_cdf_left"]

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


class Censoring(str, enum.Enum):
    LEFT = "left"
    DOUBLE = "double"


@dataclass(frozen=True)
class TobitParams:
    mu: float
    sigma: float
    censoring: Censoring = Censoring.DOUBLE

    def __post_init__(self):
        if not (self.sigma > 0.0) or math.isinf(self.sigma):
            raise DomainError(f"sigma must be a finite positive number, got {self.sigma!r}")
        if not math.isfinite(self.mu):
            raise DomainError(f"mu must be finite, got {self.mu!r}")
        object.__setattr__(self, "censoring", Censoring(self.censoring))


def _split(sample, censoring):
    y = np.asarray(sample, dtype=float).ravel()
    bad = ~((y >= 0.0) & (y <= 1.0))
    if bad.any():
        i = int(np.argmax(bad))
        raise DataError(f"value {y[i]!r} at index {i} is outside [0, 1]", index=i)
    n0 = int(np.count_nonzero(y == 0.0))
    ones = y == 1.0
    if Censoring(censoring) is Censoring.LEFT and ones.any():
        i = int(np.argmax(ones))
        raise SupportError(f"left-censored Tobit does not allow y = 1 (index {i})", index=i)
    n1 = int(np.count_nonzero(ones))
    interior = y[(y > 0.0) & (y < 1.0)]
    return n0, n1, interior


def _loglik(mu, sigma, n0, n1, interior):
    z = (interior - mu) / sigma
    ll = -0.5 * float(z @ z) - interior.size * (math.log(sigma) + _LOG_SQRT_2PI)
    if n0:
        ll += n0 * log_std_normal_cdf(-mu / sigma)
    if n1:
        ll += n1 * log_std_normal_cdf((mu - 1.0) / sigma)
    return ll


def tobit_loglik(params, sample):
    """Censored observations contribute log P(y* <= 0) or log P(y* >= 1);
    interior observations the normal log-density."""
    n0, n1, interior = _split(sample, params.censoring)
    return _loglik(params.mu, params.sigma, n0, n1, interior)


def _mills(z):
    # phi(z)/Phi(z), stable in the lower tail
    return math.exp(-0.5 * z * z - _LOG_SQRT_2PI - log_std_normal_cdf(z))


def _grad_mu_logsigma(mu, sigma, n0, n1, interior):
    z = (interior - mu) / sigma
    g_mu = float(z.sum()) / sigma
    g_ls = float(z @ z) - interior.size
    if n0:
        z0 = -mu / sigma
        lam = _mills(z0)
        g_mu -= n0 * lam / sigma
        g_ls -= n0 * lam * z0
    if n1:
        w = (mu - 1.0) / sigma
        lam = _mills(w)
        g_mu += n1 * lam / sigma
        g_ls -= n1 * lam * w
    return np.array([g_mu, g_ls])


def tobit_fit(sample, censoring=Censoring.DOUBLE, tol=1e-8, max_iter=200):
    """ML fit over (mu, log sigma) with observed-information standard errors.

    Starts at the mean and standard deviation of the interior values (all
    values when fewer than two are interior). Standard errors invert a
    central-difference Hessian of the log-likelihood in (mu, sigma).
    """
    censoring = Censoring(censoring)
    n0, n1, interior = _split(sample, censoring)
    y = np.asarray(sample, dtype=float).ravel()
    base = interior if interior.size >= 2 else y
    mu0 = float(base.mean())
    sd0 = float(base.std())
    if not sd0 > 0.0:
        sd0 = 0.5

    def objective(theta):
        sigma = math.exp(theta[1])
        if not (sigma > 0.0 and math.isfinite(sigma)):
            return -math.inf
        return _loglik(theta[0], sigma, n0, n1, interior)

    def gradient(theta):
        return _grad_mu_logsigma(theta[0], math.exp(theta[1]), n0, n1, interior)

    res = maximize(ObjectiveProblem(objective, gradient, np.array([mu0, math.log(sd0)])),
                   tol=tol, max_iter=max_iter)
    mu, sigma = float(res.x[0]), math.exp(res.x[1])
    if not res.converged:
        raise OptimizationError(
            f"Tobit fit stopped ({res.status}) after {res.iterations} iterations; "
            f"best iterate mu={mu:.6g}, sigma={sigma:.6g}", result=res)

    def grad_mu_sigma(point):
        g = _grad_mu_logsigma(point[0], point[1], n0, n1, interior)
        return np.array([g[0], g[1] / point[1]])

    hess = np.empty((2, 2))
    theta = np.array([mu, sigma])
    for j in range(2):
        h = 1e-5 * max(1.0, abs(theta[j]))
        e = np.zeros(2)
        e[j] = h
        hess[:, j] = (grad_mu_sigma(theta + e) - grad_mu_sigma(theta - e)) / (2.0 * h)
    hess = 0.5 * (hess + hess.T)
    cov = np.linalg.inv(-hess)
    se = {"mu": math.sqrt(cov[0, 0]), "sigma": math.sqrt(cov[1, 1])}

    params = TobitParams(mu, sigma, censoring)
    return FitReport(
        family=f"tobit-{censoring.value}",
        method="ml",
        n=int(y.size),
        n_zero=n0,
        n_one=n1,
        n_interior=int(interior.size),
        estimates={"mu": mu, "sigma": sigma},
        se=se,
        loglik=res.value,
        iterations=res.iterations,
        grad_norm=res.grad_norm,
        status=res.status,
        params=params,
    )


def tobit_cdf(t, params):
    """P(y <= t) for the censored observable, t in [0, 1]."""
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"t must lie in [0, 1], got {t!r}")
    if t == 1.0 and params.censoring is Censoring.DOUBLE:
        return 1.0
    return std_normal_cdf((t - params.mu) / params.sigma)


def tobit_cdf_left(t, params):
    """Left limit P(y < t)."""
    if t <= 0.0:
        return 0.0
    return std_normal_cdf((t - params.mu) / params.sigma)
