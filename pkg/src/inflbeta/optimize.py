"""Dense BFGS maximizer for small smooth problems with analytic gradients."""
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError

__all__ = ["ObjectiveProblem", "OptimizeResult", "maximize"]

CONVERGED = "converged"
MAX_ITER = "max_iter"
STALLED = "stalled"

_EPS = np.finfo(float).eps


@dataclass
class ObjectiveProblem:
    objective: Callable
    gradient: Callable
    start: np.ndarray

    @property
    def dimension(self):
        return len(self.start)


@dataclass
class OptimizeResult:
    x: np.ndarray
    value: float
    grad: np.ndarray
    iterations: int
    n_evals: int
    status: str

    @property
    def grad_norm(self):
        return float(np.max(np.abs(self.grad)))

    @property
    def converged(self):
        return self.status == CONVERGED


def maximize(problem, tol=1e-8, max_iter=200, max_step=10.0, c1=1e-4, c2=0.9, f_tol=1e-10,
             trace=None):
    """Maximize ``problem.objective`` by BFGS with backtracking line search.

    Stops when the gradient infinity-norm is at most ``tol``. Steps are
    accepted under the Armijo condition (halving from the full step); the BFGS
    update is skipped whenever the curvature condition fails.

    Close to the optimum the predicted increase falls below the rounding noise
    of ``f``, and Armijo becomes a coin flip. There a step is also accepted if
    ``f`` drops by at most ``f_tol * (|f| + 1)`` and the directional derivative
    at the new point satisfies the approximate Wolfe conditions
    ``-(1 - 2 c1) g . d <= g_new . d <= c2 g . d``. A failed line search resets the
    inverse-Hessian approximation once before the run is declared stalled.

    ``trace``, if given, is a list that receives ``(x, f)`` for each accepted
    iterate, the start included.
    """
    f_obj, f_grad = problem.objective, problem.gradient
    x = np.asarray(problem.start, dtype=float).copy()
    n = x.size
    f = f_obj(x)
    if not math.isfinite(f):
        raise DomainError(f"objective is not finite at the start point {x}")
    g = np.asarray(f_grad(x), dtype=float)
    if g.shape != x.shape:
        raise DomainError(f"gradient has shape {g.shape}, expected {x.shape}")
    n_evals = 1
    if trace is not None:
        trace.append((x.copy(), f))

    gnorm = np.max(np.abs(g))
    H = np.eye(n) / max(1.0, gnorm)
    status = MAX_ITER
    it = 0
    first = True
    reset = False
    while it < max_iter:
        if gnorm <= tol:
            status = CONVERGED
            break
        it += 1
        d = H @ g
        slope = g @ d
        if not slope > 0.0:
            H = np.eye(n) / max(1.0, gnorm)
            d = H @ g
            slope = g @ d
        dmax = np.max(np.abs(d))
        if max_step is not None and dmax > max_step:
            d *= max_step / dmax
            slope = g @ d

        noise = f_tol * (abs(f) + 1.0)
        t = 1.0
        accepted = False
        for _ in range(60):
            x_new = x + t * d
            if np.array_equal(x_new, x):
                break
            f_new = f_obj(x_new)
            n_evals += 1
            if math.isfinite(f_new):
                if f_new >= f + c1 * t * slope:
                    g_new = np.asarray(f_grad(x_new), dtype=float)
                    accepted = True
                    break
                if f_new >= f - noise:
                    # f is flat to rounding here; judge the step by the slope along d
                    g_new = np.asarray(f_grad(x_new), dtype=float)
                    if -(1.0 - 2.0 * c1) * slope <= g_new @ d <= c2 * slope:
                        accepted = True
                        break
            t *= 0.5
        if not accepted:
            if not reset:
                H = np.eye(n) / max(1.0, gnorm)
                reset = True
                continue
            status = STALLED
            break
        reset = False

        s = x_new - x
        yv = g - g_new
        sy = s @ yv
        if sy > 1e-12 * np.linalg.norm(s) * np.linalg.norm(yv):
            if first:
                H = np.eye(n) * (sy / (yv @ yv))
            rho = 1.0 / sy
            V = np.eye(n) - rho * np.outer(s, yv)
            H = V @ H @ V.T + rho * np.outer(s, s)
            first = False
        x, f, g = x_new, f_new, g_new
        gnorm = np.max(np.abs(g))
        if trace is not None:
            trace.append((x.copy(), f))
    else:
        if gnorm <= tol:
            status = CONVERGED

    return OptimizeResult(x=x, value=f, grad=g, iterations=it, n_evals=n_evals, status=status)
