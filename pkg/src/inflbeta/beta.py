"""Beta distribution in the mean-precision parameterization.

With mean ``mu`` and precision ``phi`` the shapes are ``a = mu*phi`` and
``b = (1 - mu)*phi``, so ``Var(y) = mu(1 - mu)/(phi + 1)``.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import special
from .errors import DomainError

__all__ = [
    "BetaParams",
    "beta_pdf",
    "beta_logpdf",
    "beta_cdf",
    "beta_ppf",
    "beta_moment",
    "beta_sample",
    "make_rng",
    "substream",
]

# Largest double below one; draws are clamped into [TINY, ONE_MINUS] so an
# underflowing gamma variate can never masquerade as a boundary observation.
_TINY = np.finfo(float).tiny
_ONE_MINUS = np.nextafter(1.0, 0.0)


@dataclass(frozen=True)
class BetaParams:
    mu: float
    phi: float

    def __post_init__(self):
        if not (0.0 < self.mu < 1.0):
            raise DomainError(f"mu must lie in (0, 1), got {self.mu!r}")
        if not (self.phi > 0.0) or math.isinf(self.phi):
            raise DomainError(f"phi must be a finite positive number, got {self.phi!r}")

    @property
    def a(self):
        return self.mu * self.phi

    @property
    def b(self):
        return (1.0 - self.mu) * self.phi

    @property
    def variance(self):
        return self.mu * (1.0 - self.mu) / (self.phi + 1.0)


def beta_logpdf(y, p):
    if not (0.0 < y < 1.0):
        raise DomainError(f"beta density is defined on (0, 1), got y={y!r}")
    a, b = p.a, p.b
    return ((a - 1.0) * math.log(y) + (b - 1.0) * math.log1p(-y)
            - special.log_beta(a, b))


def beta_pdf(y, p):
    return math.exp(beta_logpdf(y, p))


def beta_cdf(y, p):
    if not (0.0 <= y <= 1.0):
        raise DomainError(f"y must lie in [0, 1], got {y!r}")
    return special.reg_inc_beta(y, p.a, p.b)


def beta_ppf(q, p):
    return special.inv_reg_inc_beta(q, p.a, p.b)


def beta_moment(r, p):
    """Raw moment E(y^r) = (mu phi)_(r) / (phi)_(r), rising factorials.

    ``r = 0`` returns 1.
    """
    if r < 0 or int(r) != r:
        raise DomainError(f"moment order must be a non-negative integer, got {r!r}")
    m = 1.0
    a, phi = p.a, p.phi
    for k in range(int(r)):
        m *= (a + k) / (phi + k)
    return m


def make_rng(seed):
    """A seeded generator; the package's random source type is ``numpy.random.Generator``."""
    return np.random.default_rng(seed)


def substream(seed, *keys):
    """Independent generator keyed by ``(seed, *keys)``.

    Streams for different keys are statistically independent, and a given key
    always yields the same stream, so work can be split across processes
    without changing results.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *keys])))


def beta_sample(p, rng, size=None):
    """Draw from B(mu, phi) as G1/(G1 + G2) with gamma variates of shapes a, b.

    Returns a float when ``size`` is None, otherwise an array.
    """
    g1 = rng.standard_gamma(p.a, size)
    g2 = rng.standard_gamma(p.b, size)
    with np.errstate(invalid="ignore"):
        y = g1 / (g1 + g2)
    # both variates can underflow to zero when a, b << 1
    nan = np.isnan(y)
    if np.any(nan):
        y = np.where(nan, rng.random(size) < p.mu, y)
    y = np.clip(y, _TINY, _ONE_MINUS)
    return float(y) if size is None else y
