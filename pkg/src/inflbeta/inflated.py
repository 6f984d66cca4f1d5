"""Zero-inflated (BEZI), one-inflated (BEOI) and zero-and-one-inflated (BEINF)
beta distributions.

Densities are taken with respect to Lebesgue measure plus unit point masses at
the inflated endpoints: at an inflated endpoint the "density" is a
probability, on (0, 1) it is an ordinary density. Boundary membership is exact
equality with 0.0 or 1.0.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from . import special
from .beta import BetaParams, beta_cdf, beta_logpdf, beta_moment, beta_pdf, beta_sample
from .errors import DomainError, SupportError

__all__ = [
    "Family",
    "InflationPoint",
    "InflParams",
    "BeinfParams",
    "BeinfDeltaParams",
    "CanonicalEta",
    "infl_pdf",
    "infl_logpdf",
    "infl_cdf",
    "infl_moments",
    "infl_sample",
    "beinf_pdf",
    "beinf_logpdf",
    "beinf_cdf",
    "beinf_moments",
    "beinf_sample",
    "delta_convert",
    "delta_to_standard",
    "canonical_form",
    "pdf",
    "logpdf",
    "cdf",
    "cdf_left",
    "mean_var",
    "sample",
]


class Family(str, enum.Enum):
    BEZI = "bezi"
    BEOI = "beoi"
    BEINF = "beinf"


class InflationPoint(enum.Enum):
    ZERO = 0.0
    ONE = 1.0

    @property
    def family(self):
        return Family.BEZI if self is InflationPoint.ZERO else Family.BEOI


def _open_unit(name, value):
    if not (0.0 < value < 1.0):
        raise DomainError(f"{name} must lie in the open interval (0, 1), got {value!r}")


@dataclass(frozen=True)
class InflParams:
    """BEZI (point=ZERO) or BEOI (point=ONE) parameters."""

    alpha: float
    point: InflationPoint
    beta: BetaParams

    def __post_init__(self):
        _open_unit("alpha", self.alpha)
        if not isinstance(self.point, InflationPoint):
            raise DomainError(f"point must be an InflationPoint, got {self.point!r}")

    @classmethod
    def bezi(cls, alpha, mu, phi):
        return cls(alpha, InflationPoint.ZERO, BetaParams(mu, phi))

    @classmethod
    def beoi(cls, alpha, mu, phi):
        return cls(alpha, InflationPoint.ONE, BetaParams(mu, phi))

    @property
    def c(self):
        return self.point.value

    @property
    def family(self):
        return self.point.family


@dataclass(frozen=True)
class BeinfParams:
    """BEINF parameters: mixing weight alpha, P(y=1 | y in {0,1}) = gamma."""

    alpha: float
    gamma: float
    beta: BetaParams

    def __post_init__(self):
        _open_unit("alpha", self.alpha)
        _open_unit("gamma", self.gamma)

    @classmethod
    def of(cls, alpha, gamma, mu, phi):
        return cls(alpha, gamma, BetaParams(mu, phi))

    family = Family.BEINF


@dataclass(frozen=True)
class BeinfDeltaParams:
    """BEINF with delta0 = P(y=0) and delta1 = P(y=1)."""

    delta0: float
    delta1: float
    beta: BetaParams

    def __post_init__(self):
        _open_unit("delta0", self.delta0)
        _open_unit("delta1", self.delta1)
        if not (self.delta0 + self.delta1 < 1.0):
            raise DomainError(f"delta0 + delta1 must be < 1, got {self.delta0 + self.delta1!r}")

    family = Family.BEINF


def delta_convert(p):
    """(alpha, gamma) -> (delta0, delta1) = (alpha(1-gamma), alpha*gamma)."""
    return BeinfDeltaParams(p.alpha * (1.0 - p.gamma), p.alpha * p.gamma, p.beta)


def delta_to_standard(p):
    alpha = p.delta0 + p.delta1
    return BeinfParams(alpha, p.delta1 / alpha, p.beta)


def _as_beinf(p):
    return delta_to_standard(p) if isinstance(p, BeinfDeltaParams) else p


# ---------------------------------------------------------------- BEZI / BEOI

def infl_logpdf(y, p):
    if y == p.c:
        return math.log(p.alpha)
    if 0.0 < y < 1.0:
        return math.log1p(-p.alpha) + beta_logpdf(y, p.beta)
    raise SupportError(f"value outside distribution support: {p.family.name} "
                       f"does not include y={y!r}")


def infl_pdf(y, p):
    """Density w.r.t. Lebesgue + point mass at c: alpha at c, (1-alpha) f on (0,1)."""
    if y == p.c:
        return p.alpha
    if 0.0 < y < 1.0:
        return (1.0 - p.alpha) * beta_pdf(y, p.beta)
    raise SupportError(f"value outside distribution support: {p.family.name} "
                       f"does not include y={y!r}")


def infl_cdf(y, p):
    """alpha * 1[y >= c] + (1 - alpha) F(y)."""
    if not (0.0 <= y <= 1.0):
        raise DomainError(f"y must lie in [0, 1], got {y!r}")
    step = p.alpha if y >= p.c else 0.0
    return step + (1.0 - p.alpha) * beta_cdf(y, p.beta)


def infl_moments(r, p):
    """(E(y^r), Var(y)) for BEZI/BEOI."""
    a, c, bp = p.alpha, p.c, p.beta
    moment = a * c ** r + (1.0 - a) * beta_moment(r, bp)
    var = (1.0 - a) * bp.variance + a * (1.0 - a) * (c - bp.mu) ** 2
    return moment, var


def infl_sample(p, rng, size=None):
    """With probability alpha emit c, otherwise a beta draw."""
    inflated = rng.random(size) < p.alpha
    y = beta_sample(p.beta, rng, size)
    out = np.where(inflated, p.c, y)
    return float(out) if size is None else out


# ---------------------------------------------------------------------- BEINF

def beinf_logpdf(y, p):
    p = _as_beinf(p)
    if y == 0.0:
        return math.log(p.alpha) + math.log1p(-p.gamma)
    if y == 1.0:
        return math.log(p.alpha) + math.log(p.gamma)
    if 0.0 < y < 1.0:
        return math.log1p(-p.alpha) + beta_logpdf(y, p.beta)
    raise DomainError(f"y must lie in [0, 1], got {y!r}")


def beinf_pdf(y, p):
    """alpha(1-gamma) at 0, alpha*gamma at 1, (1-alpha) f(y) on (0, 1).

    Accepts :class:`BeinfDeltaParams` as well.
    """
    if isinstance(p, BeinfDeltaParams):
        if y == 0.0:
            return p.delta0
        if y == 1.0:
            return p.delta1
        if 0.0 < y < 1.0:
            return (1.0 - p.delta0 - p.delta1) * beta_pdf(y, p.beta)
        raise DomainError(f"y must lie in [0, 1], got {y!r}")
    if y == 0.0:
        return p.alpha * (1.0 - p.gamma)
    if y == 1.0:
        return p.alpha * p.gamma
    if 0.0 < y < 1.0:
        return (1.0 - p.alpha) * beta_pdf(y, p.beta)
    raise DomainError(f"y must lie in [0, 1], got {y!r}")


def beinf_cdf(y, p):
    """alpha Ber(y; gamma) + (1 - alpha) F(y)."""
    p = _as_beinf(p)
    if not (0.0 <= y <= 1.0):
        raise DomainError(f"y must lie in [0, 1], got {y!r}")
    bern = 1.0 if y >= 1.0 else 1.0 - p.gamma
    return p.alpha * bern + (1.0 - p.alpha) * beta_cdf(y, p.beta)


def beinf_moments(r, p):
    p = _as_beinf(p)
    a, g, bp = p.alpha, p.gamma, p.beta
    moment = a * g + (1.0 - a) * beta_moment(r, bp)
    var = a * g * (1.0 - g) + (1.0 - a) * bp.variance + a * (1.0 - a) * (g - bp.mu) ** 2
    return moment, var


def beinf_sample(p, rng, size=None):
    """Inflation flag ~ Bernoulli(alpha); then Bernoulli(gamma) or a beta draw."""
    p = _as_beinf(p)
    inflated = rng.random(size) < p.alpha
    ones = rng.random(size) < p.gamma
    y = beta_sample(p.beta, rng, size)
    out = np.where(inflated, np.where(ones, 1.0, 0.0), y)
    return float(out) if size is None else out


# ------------------------------------------------------------ canonical form

@dataclass(frozen=True)
class CanonicalEta:
    """Natural parameters of the inflated beta law as a full-rank exponential family.

    The density is ``exp(eta @ T(y) - B*(eta)) h(y)`` with
    ``h(y) = 1/(y(1-y))`` on (0, 1) and 1 at an inflated endpoint.
    """

    eta: np.ndarray
    family: Family
    c: float = None

    def statistic(self, y):
        """T(y) for a single observation."""
        interior = 0.0 < y < 1.0
        ly = math.log(y) if interior else 0.0
        l1y = math.log1p(-y) if interior else 0.0
        if self.family is Family.BEINF:
            if not (0.0 <= y <= 1.0):
                raise DomainError(f"y must lie in [0, 1], got {y!r}")
            edge = 0.0 if interior else 1.0
            return np.array([edge, y * edge, ly, l1y])
        if not (interior or y == self.c):
            raise SupportError(f"value outside distribution support: y={y!r}")
        return np.array([0.0 if interior else 1.0, ly, l1y])

    def log_partition(self):
        e = self.eta
        if self.family is Family.BEINF:
            lb = special.log_beta(e[2], e[3])
            m = math.log1p(math.exp(e[1])) if e[1] < 30 else e[1] + math.log1p(math.exp(-e[1]))
            return _log1pexp(e[0] + m - lb) + lb
        lb = special.log_beta(e[1], e[2])
        return _log1pexp(e[0] - lb) + lb

    @staticmethod
    def base_measure(y):
        return 1.0 / (y * (1.0 - y)) if 0.0 < y < 1.0 else 1.0

    def density(self, y):
        t = self.statistic(y)
        return math.exp(float(self.eta @ t) - self.log_partition()) * self.base_measure(y)


def _log1pexp(x):
    return x + math.log1p(math.exp(-x)) if x > 0 else math.log1p(math.exp(x))


def canonical_form(p):
    """Natural parameters for BEZI/BEOI (3-vector) or BEINF (4-vector)."""
    if isinstance(p, InflParams):
        a, b = p.beta.a, p.beta.b
        eta1 = math.log(p.alpha / (1.0 - p.alpha)) + special.log_beta(a, b)
        return CanonicalEta(np.array([eta1, a, b]), p.family, p.c)
    p = _as_beinf(p)
    a, b = p.beta.a, p.beta.b
    eta2 = math.log(p.gamma / (1.0 - p.gamma))
    m = math.log1p(math.exp(eta2)) if eta2 < 30 else eta2 + math.log1p(math.exp(-eta2))
    eta1 = math.log(p.alpha / (1.0 - p.alpha)) - m + special.log_beta(a, b)
    return CanonicalEta(np.array([eta1, eta2, a, b]), Family.BEINF)


# ------------------------------------------------------- family-generic helpers

def pdf(y, p):
    return infl_pdf(y, p) if isinstance(p, InflParams) else beinf_pdf(y, p)


def logpdf(y, p):
    return infl_logpdf(y, p) if isinstance(p, InflParams) else beinf_logpdf(y, p)


def cdf(y, p):
    return infl_cdf(y, p) if isinstance(p, InflParams) else beinf_cdf(y, p)


def cdf_left(y, p):
    """Left limit P(Y < y) of the distribution function."""
    if y <= 0.0:
        return 0.0
    if y < 1.0:
        return cdf(y, p)
    if isinstance(p, InflParams):
        return 1.0 - p.alpha if p.c == 1.0 else 1.0
    q = _as_beinf(p)
    return 1.0 - q.alpha * q.gamma


def mean_var(p):
    """(E(y), Var(y)) for any of the three families."""
    return infl_moments(1, p) if isinstance(p, InflParams) else beinf_moments(1, p)


def sample(p, rng, size=None):
    return infl_sample(p, rng, size) if isinstance(p, InflParams) else beinf_sample(p, rng, size)
