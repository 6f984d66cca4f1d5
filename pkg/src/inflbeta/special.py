"""Scalar special functions: log-gamma, digamma, trigamma, the regularized
incomplete beta function and its inverse, and the standard normal CDF.

All functions take and return Python floats and are safe to call from
multiple threads.
"""
import math

from .errors import DomainError

__all__ = [
    "log_gamma",
    "log_beta",
    "digamma",
    "trigamma",
    "reg_inc_beta",
    "inv_reg_inc_beta",
    "std_normal_cdf",
    "std_normal_pdf",
    "log_std_normal_cdf",
]

_SQRT2 = math.sqrt(2.0)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# Recurrence threshold for the asymptotic expansions of digamma/trigamma.
_ASYMPTOTIC_FROM = 10.0


def _check_positive(x, name="x"):
    if not (x > 0.0) or math.isinf(x):
        raise DomainError(f"{name} must be a finite positive number, got {x!r}")


def log_gamma(x):
    """Natural log of the gamma function for x > 0."""
    _check_positive(x)
    return math.lgamma(x)


def log_beta(a, b):
    """log B(a, b) = lnΓ(a) + lnΓ(b) − lnΓ(a + b)."""
    _check_positive(a, "a")
    _check_positive(b, "b")
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def digamma(x):
    """ψ(x), the logarithmic derivative of the gamma function, for x > 0.

    Shifts x upward with ψ(x) = ψ(x + 1) − 1/x until x ≥ 10, then sums the
    asymptotic series in 1/x².
    """
    _check_positive(x)
    shift = 0.0
    while x < _ASYMPTOTIC_FROM:
        shift -= 1.0 / x
        x += 1.0
    r = 1.0 / (x * x)
    series = r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (
        1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))))
    return shift + math.log(x) - 0.5 / x - series


def trigamma(x):
    """ψ'(x) for x > 0, by the same shift-then-expand scheme as :func:`digamma`."""
    _check_positive(x)
    shift = 0.0
    while x < _ASYMPTOTIC_FROM:
        shift += 1.0 / (x * x)
        x += 1.0
    r = 1.0 / (x * x)
    series = r * (1.0 / 6 - r * (1.0 / 30 - r * (1.0 / 42 - r * (
        1.0 / 30 - r * (5.0 / 66 - r * (691.0 / 2730 - r * 7.0 / 6))))))
    return shift + 1.0 / x + 0.5 * r + series / x


def _betacf(x, a, b):
    # Modified Lentz evaluation of the continued fraction for I_x(a, b).
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    max_iter = 10000 + int(10 * math.sqrt(max(a, b)))
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h
    raise ArithmeticError(f"incomplete beta continued fraction did not converge "
                          f"(x={x}, a={a}, b={b})")


def reg_inc_beta(x, a, b):
    """Regularized incomplete beta function I_x(a, b).

    Continued fraction, evaluated directly when x < (a + 1)/(a + b + 2) and
    through I_x(a, b) = 1 − I_{1−x}(b, a) otherwise.
    """
    _check_positive(a, "a")
    _check_positive(b, "b")
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    lbeta = log_beta(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        front = math.exp(a * math.log(x) + b * math.log1p(-x) - lbeta)
        return min(1.0, front * _betacf(x, a, b) / a)
    y = 1.0 - x
    front = math.exp(b * math.log(y) + a * math.log(x) - lbeta)
    return max(0.0, 1.0 - front * _betacf(y, b, a) / b)


def inv_reg_inc_beta(p, a, b):
    """Inverse of :func:`reg_inc_beta` in x: returns x with I_x(a, b) = p.

    Newton iterations on a shrinking bracket, falling back to bisection when a
    Newton step leaves the bracket.
    """
    _check_positive(a, "a")
    _check_positive(b, "b")
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"p must lie in [0, 1], got {p!r}")
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return 1.0

    lbeta = log_beta(a, b)
    lo, hi = 0.0, 1.0

    # Tail approximations I_x ~ x^a/(a B) near 0 and 1 − (1−x)^b/(b B) near 1.
    guesses = []
    g = math.exp((math.log(p) + math.log(a) + lbeta) / a)
    if 0.0 < g < 1.0:
        guesses.append(g)
    g = -math.expm1((math.log1p(-p) + math.log(b) + lbeta) / b)
    if 0.0 < g < 1.0:
        guesses.append(g)
    guesses.append(a / (a + b))

    best_x, best_f = None, math.inf
    for g in guesses:
        f = reg_inc_beta(g, a, b) - p
        if f < 0.0:
            lo = max(lo, g)
        else:
            hi = min(hi, g)
        if abs(f) < abs(best_f):
            best_x, best_f = g, f

    x, f = best_x, best_f
    for _ in range(2000):
        if abs(f) <= 1e-15 or hi - lo <= 2.0 * math.ulp(x):
            break
        logpdf = (a - 1.0) * math.log(x) + (b - 1.0) * math.log1p(-x) - lbeta
        x_new = x - f / math.exp(logpdf) if logpdf < 700.0 else x
        if not (lo < x_new < hi) or x_new == x:
            x_new = 0.5 * (lo + hi)
        x = x_new
        f = reg_inc_beta(x, a, b) - p
        if f < 0.0:
            lo = x
        else:
            hi = x
    return x


def std_normal_cdf(z):
    """Φ(z) through the complementary error function (no underflow for |z| ≤ 37)."""
    return 0.5 * math.erfc(-z / _SQRT2)


def std_normal_pdf(z):
    return math.exp(-0.5 * z * z - _LOG_SQRT_2PI)


def log_std_normal_cdf(z):
    """log Φ(z), accurate far into the lower tail."""
    if z > -30.0:
        return math.log(0.5 * math.erfc(-z / _SQRT2))
    # Mills-ratio expansion of the lower tail.
    r = 1.0 / (z * z)
    corr = 1.0 - r * (1.0 - 3.0 * r * (1.0 - 5.0 * r * (1.0 - 7.0 * r)))
    return -0.5 * z * z - _LOG_SQRT_2PI - math.log(-z) + math.log(corr)
