"""Likelihood inference for the inflated beta families.

The likelihood factorizes into a Bernoulli part for the boundary counts and a
beta part for the interior values, so ``alpha`` (and ``gamma``) have closed-form
ML estimates while ``(mu, phi)`` are found numerically in the unconstrained
coordinates ``(logit mu, log phi)``. Standard errors come from the expected
(Fisher) information.
"""
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import special
from .beta import BetaParams
from .errors import (
    BoundaryEstimateError,
    DataError,
    DomainError,
    InsufficientDataError,
    MomentError,
    OptimizationError,
    SupportError,
)
from .inflated import (
    BeinfDeltaParams,
    BeinfParams,
    Family,
    InflationPoint,
    InflParams,
    delta_to_standard,
)
from .optimize import ObjectiveProblem, maximize

__all__ = [
    "BoundaryWarning",
    "SuffStats",
    "FisherMatrix",
    "FitReport",
    "sufficient_stats",
    "mle_alpha",
    "mle_gamma",
    "loglik",
    "score_mu_phi",
    "score",
    "cm_mu_phi",
    "mle_mu_phi",
    "fisher_info",
    "mean_gradient",
    "var_gradient",
    "delta_method_var",
    "fit",
]

GRAD_TOL = 1e-8
MAX_ITER = 200


class BoundaryWarning(UserWarning):
    """An estimate sits on the boundary of the parameter space."""


def _family(family):
    return family if isinstance(family, Family) else Family(str(family).lower())


@dataclass(frozen=True)
class SuffStats:
    """Boundary counts and interior log-sums of a sample.

    ``t1`` counts boundary observations, ``t2`` sums the boundary values (the
    number of ones; always 0 for BEZI/BEOI), ``t3`` and ``t4`` are the sums of
    ``log y`` and ``log(1 - y)`` over the interior. ``ysum``/``ysq`` are the
    interior sum and sum of squares, kept for starting values.
    """

    n: int
    t1: int
    t2: int
    t3: float
    t4: float
    family: Family
    ysum: float = 0.0
    ysq: float = 0.0

    @property
    def n_interior(self):
        return self.n - self.t1

    @property
    def n_zero(self):
        if self.family is Family.BEINF:
            return self.t1 - self.t2
        return self.t1 if self.family is Family.BEZI else 0

    @property
    def n_one(self):
        if self.family is Family.BEINF:
            return self.t2
        return self.t1 if self.family is Family.BEOI else 0


def sufficient_stats(sample, family):
    family = _family(family)
    y = np.asarray(sample, dtype=float).ravel()
    if y.size == 0:
        raise DataError("empty sample")
    bad = ~((y >= 0.0) & (y <= 1.0))
    if bad.any():
        i = int(np.argmax(bad))
        raise DataError(f"value {y[i]!r} at index {i} is outside [0, 1]", index=i)
    zeros = y == 0.0
    ones = y == 1.0
    if family is Family.BEZI and ones.any():
        i = int(np.argmax(ones))
        raise SupportError(f"BEZI support is [0, 1): value 1 at index {i}", index=i)
    if family is Family.BEOI and zeros.any():
        i = int(np.argmax(zeros))
        raise SupportError(f"BEOI support is (0, 1]: value 0 at index {i}", index=i)
    interior = y[~(zeros | ones)]
    t1 = int(y.size - interior.size)
    t2 = int(ones.sum()) if family is Family.BEINF else 0
    return SuffStats(
        n=int(y.size),
        t1=t1,
        t2=t2,
        t3=float(np.log(interior).sum()),
        t4=float(np.log1p(-interior).sum()),
        family=family,
        ysum=float(interior.sum()),
        ysq=float((interior * interior).sum()),
    )


# ------------------------------------------------------- closed-form pieces

def mle_alpha(stats):
    """alpha-hat = T1/n with plug-in variance alpha-hat(1 - alpha-hat)/n."""
    if stats.t1 == 0:
        raise BoundaryEstimateError(
            "no observations at the inflation point(s), so alpha-hat = 0; "
            "a plain beta model is appropriate for these data")
    if stats.t1 == stats.n:
        raise BoundaryEstimateError(
            "every observation is at the boundary, so alpha-hat = 1; "
            "inflated beta models are not recommended for these data")
    a = stats.t1 / stats.n
    return a, a * (1.0 - a) / stats.n


def mle_gamma(stats):
    """gamma-hat = T2/T1 with 0/0 taken as 0; warns when the estimate is 0 or 1."""
    if stats.t1 == 0:
        warnings.warn("no boundary observations; gamma-hat set to 0", BoundaryWarning,
                      stacklevel=2)
        return 0.0
    g = stats.t2 / stats.t1
    if g in (0.0, 1.0):
        warnings.warn(f"gamma-hat = {g:g} is on the boundary", BoundaryWarning, stacklevel=2)
    return g


def cm_mu_phi(interior):
    """Conditional-moment estimates (mu~, phi~) from the interior observations.

    ``s2`` uses the divisor n - T1 (the interior count), not n - T1 - 1.
    """
    y = np.asarray(interior, dtype=float)
    if y.size < 2:
        raise InsufficientDataError(f"need at least 2 interior observations, got {y.size}")
    m = float(y.mean())
    s2 = float(((y - m) ** 2).mean())
    v = m * (1.0 - m)
    # a constant sample can leave s2 at rounding level instead of exactly 0
    if y.min() == y.max() or not (s2 > 0.0):
        raise MomentError("interior sample variance is zero")
    if s2 >= v:
        raise MomentError(f"interior variance {s2:g} >= mean*(1 - mean) = {v:g}; phi~ <= 0")
    return m, v / s2 - 1.0


# ------------------------------------------------------------- likelihood

def _check_family(params, stats):
    fam = params.family
    if fam is not stats.family:
        raise DomainError(f"parameters are {fam.name} but statistics are {stats.family.name}")


def _beta_loglik(mu, phi, stats):
    a, b = mu * phi, (1.0 - mu) * phi
    m = stats.n_interior
    return (m * (math.lgamma(phi) - math.lgamma(a) - math.lgamma(b))
            + stats.t3 * (a - 1.0) + stats.t4 * (b - 1.0))


def loglik(params, stats):
    """l1(alpha) + [l2(gamma)] + l(mu, phi) at the given parameters."""
    if isinstance(params, BeinfDeltaParams):
        params = delta_to_standard(params)
    _check_family(params, stats)
    a = params.alpha
    n, t1 = stats.n, stats.t1
    ll = t1 * math.log(a) + (n - t1) * math.log1p(-a)
    if isinstance(params, BeinfParams):
        g = params.gamma
        ll += stats.t2 * math.log(g) + (t1 - stats.t2) * math.log1p(-g)
    return ll + _beta_loglik(params.beta.mu, params.beta.phi, stats)


def score_mu_phi(mu, phi, stats):
    """(U_mu, U_phi): derivatives of the beta part of the log-likelihood."""
    BetaParams(mu, phi)
    m = stats.n_interior
    da = special.digamma(mu * phi)
    db = special.digamma((1.0 - mu) * phi)
    u_mu = phi * (m * (db - da) + stats.t3 - stats.t4)
    u_phi = (m * (special.digamma(phi) - mu * da - (1.0 - mu) * db)
             + mu * stats.t3 + (1.0 - mu) * stats.t4)
    return u_mu, u_phi


def score(params, stats):
    """Full score vector in the order of :func:`fisher_info` names."""
    if isinstance(params, BeinfDeltaParams):
        params = delta_to_standard(params)
    _check_family(params, stats)
    a = params.alpha
    n, t1 = stats.n, stats.t1
    u = [t1 / a - (n - t1) / (1.0 - a)]
    if isinstance(params, BeinfParams):
        g = params.gamma
        u.append(stats.t2 / g - (t1 - stats.t2) / (1.0 - g))
    u.extend(score_mu_phi(params.beta.mu, params.beta.phi, stats))
    return np.array(u)


def _expit(t):
    if t >= 0:
        return 1.0 / (1.0 + math.exp(-t))
    e = math.exp(t)
    return e / (1.0 + e)


def _start_from_stats(stats):
    m = stats.n_interior
    ybar = stats.ysum / m
    s2 = stats.ysq / m - ybar * ybar
    if 0.0 < ybar < 1.0 and 0.0 < s2 < ybar * (1.0 - ybar):
        return ybar, ybar * (1.0 - ybar) / s2 - 1.0
    ybar = min(max(ybar, 1e-6), 1.0 - 1e-6) if ybar > 0 else 0.5
    return ybar, 1.0


def mle_mu_phi(stats, start=None, tol=GRAD_TOL, max_iter=MAX_ITER):
    """ML estimates of (mu, phi) by BFGS on (logit mu, log phi).

    ``start`` defaults to the conditional-moment estimate, or ``(ybar, 1)``
    when that is infeasible. Returns ``(mu, phi, result)`` where ``result`` is
    the optimizer's :class:`~inflbeta.optimize.OptimizeResult`.
    """
    if stats.n_interior < 2:
        raise InsufficientDataError(
            f"need at least 2 interior observations, got {stats.n_interior}")
    if start is None:
        start = _start_from_stats(stats)
    mu0, phi0 = start
    m, t3, t4 = stats.n_interior, stats.t3, stats.t4

    def objective(theta):
        if abs(theta[0]) > 700.0 or abs(theta[1]) > 700.0:
            return -math.inf
        mu = _expit(theta[0])
        phi = math.exp(theta[1])
        a, b = mu * phi, (1.0 - mu) * phi
        if not (a > 0.0 and b > 0.0 and math.isfinite(phi)):
            return -math.inf
        return (m * (math.lgamma(phi) - math.lgamma(a) - math.lgamma(b))
                + t3 * (a - 1.0) + t4 * (b - 1.0))

    def gradient(theta):
        mu = _expit(theta[0])
        phi = math.exp(theta[1])
        da = special.digamma(mu * phi)
        db = special.digamma((1.0 - mu) * phi)
        u_mu = phi * (m * (db - da) + t3 - t4)
        u_phi = m * (special.digamma(phi) - mu * da - (1.0 - mu) * db) + mu * t3 + (1.0 - mu) * t4
        return np.array([u_mu * mu * (1.0 - mu), u_phi * phi])

    theta0 = np.array([math.log(mu0 / (1.0 - mu0)), math.log(phi0)])
    res = maximize(ObjectiveProblem(objective, gradient, theta0), tol=tol, max_iter=max_iter)
    mu_hat, phi_hat = _expit(res.x[0]), math.exp(res.x[1])
    if not res.converged:
        raise OptimizationError(
            f"BFGS stopped ({res.status}) after {res.iterations} iterations with "
            f"gradient norm {res.grad_norm:.3g}; best iterate mu={mu_hat:.6g}, phi={phi_hat:.6g}",
            result=res)
    return mu_hat, phi_hat, res


# --------------------------------------------------------- information

@dataclass(frozen=True)
class FisherMatrix:
    """Per-observation expected information with parameter names."""

    names: tuple
    matrix: np.ndarray

    @property
    def order(self):
        return len(self.names)

    def inverse(self):
        try:
            return np.linalg.inv(self.matrix)
        except np.linalg.LinAlgError as exc:
            raise ArithmeticError(f"singular information matrix: {exc}") from exc

    def standard_errors(self, n):
        """Asymptotic standard errors sqrt(diag(K^-1)/n)."""
        return dict(zip(self.names, np.sqrt(np.diag(self.inverse()) / n)))


def _beta_block(weight, bp):
    mu, phi = bp.mu, bp.phi
    ta = special.trigamma(bp.a)
    tb = special.trigamma(bp.b)
    k_mm = weight * phi * phi * (ta + tb)
    k_mp = weight * phi * (mu * ta - (1.0 - mu) * tb)
    k_pp = weight * (mu * mu * ta + (1.0 - mu) ** 2 * tb - special.trigamma(phi))
    return np.array([[k_mm, k_mp], [k_mp, k_pp]])


def fisher_info(params):
    """Expected information per observation.

    3x3 (alpha, mu, phi) for BEZI/BEOI, 4x4 (alpha, gamma, mu, phi) for BEINF,
    and 4x4 (delta0, delta1, mu, phi) for :class:`BeinfDeltaParams`.
    """
    if isinstance(params, InflParams):
        a = params.alpha
        K = np.zeros((3, 3))
        K[0, 0] = 1.0 / (a * (1.0 - a))
        K[1:, 1:] = _beta_block(1.0 - a, params.beta)
        return FisherMatrix(("alpha", "mu", "phi"), K)
    K = np.zeros((4, 4))
    if isinstance(params, BeinfDeltaParams):
        d0, d1 = params.delta0, params.delta1
        rest = 1.0 - d0 - d1
        K[0, 0] = (1.0 - d1) / (d0 * rest)
        K[1, 1] = (1.0 - d0) / (d1 * rest)
        K[0, 1] = K[1, 0] = 1.0 / rest
        K[2:, 2:] = _beta_block(rest, params.beta)
        return FisherMatrix(("delta0", "delta1", "mu", "phi"), K)
    a, g = params.alpha, params.gamma
    K[0, 0] = 1.0 / (a * (1.0 - a))
    K[1, 1] = a / (g * (1.0 - g))
    K[2:, 2:] = _beta_block(1.0 - a, params.beta)
    return FisherMatrix(("alpha", "gamma", "mu", "phi"), K)


def mean_gradient(params):
    """d E(y) / d theta in the standard parameterization."""
    mu = params.beta.mu
    a = params.alpha
    if isinstance(params, InflParams):
        return np.array([params.c - mu, 1.0 - a, 0.0])
    g = params.gamma
    return np.array([g - mu, a, 1.0 - a, 0.0])


def var_gradient(params):
    """d Var(y) / d theta, by exact differentiation of the variance formula."""
    mu, phi = params.beta.mu, params.beta.phi
    a = params.alpha
    v2 = mu * (1.0 - mu) / (phi + 1.0)
    d_mu_beta = (1.0 - a) * (1.0 - 2.0 * mu) / (phi + 1.0)
    d_phi = -(1.0 - a) * mu * (1.0 - mu) / (phi + 1.0) ** 2
    if isinstance(params, InflParams):
        c = params.c
        return np.array([
            -v2 + (1.0 - 2.0 * a) * (c - mu) ** 2,
            d_mu_beta - 2.0 * a * (1.0 - a) * (c - mu),
            d_phi,
        ])
    g = params.gamma
    return np.array([
        g * (1.0 - g) - v2 + (1.0 - 2.0 * a) * (g - mu) ** 2,
        a * (1.0 - 2.0 * g) + 2.0 * a * (1.0 - a) * (g - mu),
        d_mu_beta - 2.0 * a * (1.0 - a) * (g - mu),
        d_phi,
    ])


def delta_method_var(params, target="mean"):
    """Asymptotic variance r'(theta)^T K(theta)^-1 r'(theta) of sqrt(n)(r(theta-hat) - r(theta)).

    ``target`` is ``"mean"`` for E(y) or ``"variance"`` for Var(y).
    """
    if isinstance(params, BeinfDeltaParams):
        params = delta_to_standard(params)
    if target == "mean":
        r = mean_gradient(params)
    elif target == "variance":
        r = var_gradient(params)
    else:
        raise ValueError(f"target must be 'mean' or 'variance', got {target!r}")
    return float(r @ fisher_info(params).inverse() @ r)


# -------------------------------------------------------------------- fit

@dataclass
class FitReport:
    family: str
    method: str
    n: int
    n_zero: int
    n_one: int
    n_interior: int
    estimates: dict
    se: dict
    loglik: float
    iterations: int = 0
    grad_norm: float = None
    status: str = "closed-form"
    parameterization: str = "standard"
    params: object = field(default=None, repr=False)

    def to_dict(self):
        """Flat mapping with stable keys, suitable for JSON output."""
        out = {
            "family": self.family,
            "method": self.method,
            "parameterization": self.parameterization,
            "n": self.n,
            "n_zero": self.n_zero,
            "n_one": self.n_one,
            "n_interior": self.n_interior,
        }
        out.update(self.estimates)
        out.update({f"se_{k}": v for k, v in self.se.items()})
        out.update({
            "loglik": self.loglik,
            "iterations": self.iterations,
            "grad_norm": self.grad_norm,
            "status": self.status,
        })
        return out


def _interior(sample):
    y = np.asarray(sample, dtype=float).ravel()
    return y[(y > 0.0) & (y < 1.0)]


def fit(sample, family, method="ml", parameterization="standard"):
    """Fit BEZI, BEOI or BEINF to ``sample``.

    ``method="ml"`` maximizes the likelihood and reports expected-information
    standard errors; ``method="cm"`` uses the closed-form conditional-moment
    estimates of (mu, phi) (alpha and gamma are their ML estimates either way)
    and reports no standard errors. ``parameterization="delta"`` (BEINF only)
    reports delta0 = P(y=0) and delta1 = P(y=1) instead of alpha and gamma.
    """
    family = _family(family)
    if method not in ("ml", "cm"):
        raise ValueError(f"method must be 'ml' or 'cm', got {method!r}")
    if parameterization not in ("standard", "delta"):
        raise ValueError(f"unknown parameterization {parameterization!r}")
    if parameterization == "delta" and family is not Family.BEINF:
        raise ValueError("the delta parameterization applies to BEINF only")

    stats = sufficient_stats(sample, family)
    alpha, _ = mle_alpha(stats)
    gamma = None
    if family is Family.BEINF:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BoundaryWarning)
            gamma = mle_gamma(stats)
        if gamma in (0.0, 1.0):
            other = "BEZI" if gamma == 0.0 else "BEOI"
            raise BoundaryEstimateError(
                f"gamma-hat = {gamma:g}: the sample has boundary values at one end only; "
                f"fit {other} instead")

    interior = _interior(sample)
    iterations, grad_norm, status = 0, None, "closed-form"
    if method == "cm":
        mu, phi = cm_mu_phi(interior)
    else:
        try:
            start = cm_mu_phi(interior)
        except (InsufficientDataError, MomentError):
            start = None
        mu, phi, res = mle_mu_phi(stats, start=start)
        iterations, grad_norm, status = res.iterations, res.grad_norm, res.status

    bp = BetaParams(mu, phi)
    if family is Family.BEINF:
        params = BeinfParams(alpha, gamma, bp)
    else:
        point = InflationPoint.ZERO if family is Family.BEZI else InflationPoint.ONE
        params = InflParams(alpha, point, bp)
    ll = loglik(params, stats)

    if parameterization == "delta":
        d0 = (stats.t1 - stats.t2) / stats.n
        d1 = stats.t2 / stats.n
        report_params = BeinfDeltaParams(d0, d1, bp)
        estimates = {"delta0": d0, "delta1": d1, "mu": mu, "phi": phi}
    else:
        report_params = params
        estimates = {"alpha": alpha}
        if gamma is not None:
            estimates["gamma"] = gamma
        estimates.update(mu=mu, phi=phi)

    se = {}
    if method == "ml":
        se = {k: float(v) for k, v in fisher_info(report_params).standard_errors(stats.n).items()}

    return FitReport(
        family=family.value,
        method=method,
        n=stats.n,
        n_zero=stats.n_zero,
        n_one=stats.n_one,
        n_interior=stats.n_interior,
        estimates=estimates,
        se=se,
        loglik=ll,
        iterations=iterations,
        grad_norm=grad_norm,
        status=status,
        parameterization=parameterization,
        params=report_params,
    )
