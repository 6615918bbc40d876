"""Small dense nonlinear programs: one equality, box bounds, linear inequalities.

Maximizes ``fun`` subject to ``eq(x) = 0``, ``lower <= x <= upper`` and
``A_ub @ x <= b_ub`` with a PHR augmented Lagrangian. Each subproblem is
solved by a projected BFGS method; bounds are enforced by clipping. When
second derivatives are supplied, the final iterate is refined by Newton
steps on the KKT system of the active constraints.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

log = logging.getLogger(__name__)

Vector = np.ndarray
ScalarFn = Callable[[Vector], float]
VectorFn = Callable[[Vector], Vector]
MatrixFn = Callable[[Vector], np.ndarray]


@dataclass
class NLPResult:
    x: Vector
    fun: float
    eq_residual: float
    ineq_violation: float
    multiplier: float
    kkt_residual: float
    iterations: int
    converged: bool
    message: str
    history: list[float] = field(default_factory=list)


@dataclass
class _Problem:
    fun: ScalarFn
    grad: VectorFn
    eq: ScalarFn
    eq_grad: VectorFn
    lower: Vector
    upper: Vector
    A: Vector
    b: Vector

    def clip(self, x: Vector) -> Vector:
        return np.clip(x, self.lower, self.upper)

    def slack(self, x: Vector) -> Vector:
        return self.A @ x - self.b


def _projected_gradient(prob: _Problem, x: Vector, g: Vector) -> float:
    """Infinity norm of ``x - P(x - g)`` for a descent-direction gradient ``g``."""
    return float(np.max(np.abs(x - prob.clip(x - g)))) if len(x) else 0.0


def _projected_bfgs(
    f: ScalarFn,
    g: VectorFn,
    prob: _Problem,
    x: Vector,
    tol: float,
    max_iter: int,
    trace: Optional[list[float]] = None,
    ftol: float = 1e-15,
    patience: int = 5,
) -> tuple[Vector, int, bool]:
    """Minimize ``f`` over the box. Returns ``(x, iterations, reached_tol)``.

    Also stops, without reaching ``tol``, once ``patience`` consecutive steps
    each lower ``f`` by less than ``ftol * max(1, |f|)``; past that point the
    decrease is rounding noise.
    """
    m = len(x)
    flat = 0
    H = np.eye(m)
    fx, gx = f(x), g(x)
    if trace is not None:
        trace.append(fx)
    for it in range(max_iter):
        if _projected_gradient(prob, x, gx) <= tol:
            return x, it, True
        pinned = ((x <= prob.lower) & (gx > 0)) | ((x >= prob.upper) & (gx < 0))
        free = ~pinned
        d = np.zeros(m)
        d[free] = -(H[np.ix_(free, free)] @ gx[free])
        if not np.dot(d, gx) < 0:
            H = np.eye(m)
            d = np.where(free, -gx, 0.0)
        t = 1.0
        while True:
            xn = prob.clip(x + t * d)
            fn = f(xn)
            if fn <= fx + 1e-4 * np.dot(gx, xn - x):
                break
            t *= 0.5
            if t < 1e-16:
                return x, it, False
        flat = flat + 1 if fx - fn <= ftol * max(1.0, abs(fx)) else 0
        if flat >= patience:
            return xn, it + 1, False
        gn = g(xn)
        s, y = xn - x, gn - gx
        sy = float(np.dot(s, y))
        if sy > 1e-300 * max(1.0, float(np.dot(y, y))):
            if it == 0:
                H = np.eye(m) * (sy / float(np.dot(y, y)))
            rho = 1.0 / sy
            V = np.eye(m) - rho * np.outer(s, y)
            H = V @ H @ V.T + rho * np.outer(s, s)
        x, fx, gx = xn, fn, gn
        if trace is not None:
            trace.append(fx)
    return x, max_iter, False


def _lagrangian_gradient(prob: _Problem, x: Vector, lam: float, nu: Vector) -> Vector:
    """Gradient of ``-fun + lam * eq + nu @ (A x - b)`` (minimization form)."""
    return -prob.grad(x) + lam * prob.eq_grad(x) + prob.A.T @ nu


def _kkt_residual(prob: _Problem, x: Vector, lam: float, nu: Vector) -> float:
    return _projected_gradient(prob, x, _lagrangian_gradient(prob, x, lam, nu))


def _newton_kkt(
    prob: _Problem,
    hess: MatrixFn,
    eq_hess: MatrixFn,
    x: Vector,
    lam: float,
    nu: Vector,
    steps: int = 8,
) -> tuple[Vector, float, Vector, int]:
    """Newton refinement on the KKT system of the active constraints.

    Linear inequalities with a positive multiplier are held as equalities and
    variables sitting on a bound stay fixed. Steps that leave the feasible
    region, flip a multiplier's sign or increase the KKT residual are rejected.
    """
    fixed = (x <= prob.lower) | (x >= prob.upper)
    free = np.flatnonzero(~fixed)
    active = np.flatnonzero(nu > 0)
    if free.size == 0 or steps <= 0:
        return x, lam, nu, 0
    best = _kkt_residual(prob, x, lam, nu) + abs(prob.eq(x)) + float(np.sum(np.abs(prob.slack(x)[active])))
    k, r = free.size, active.size
    done = 0
    for _ in range(steps):
        gl = _lagrangian_gradient(prob, x, lam, nu)[free]
        Hl = (-hess(x) + lam * eq_hess(x))[np.ix_(free, free)]
        C = np.vstack((prob.eq_grad(x)[free], prob.A[np.ix_(active, free)]))
        K = np.zeros((k + 1 + r, k + 1 + r))
        K[:k, :k] = Hl
        K[:k, k:] = C.T
        K[k:, :k] = C
        rhs = -np.concatenate((gl, [prob.eq(x)], prob.slack(x)[active]))
        try:
            step = np.linalg.solve(K, rhs)
        except np.linalg.LinAlgError:
            break
        xn = x.copy()
        xn[free] += step[:k]
        ln = lam + step[k]
        nn = nu.copy()
        nn[active] += step[k + 1 :]
        inactive = np.ones(len(prob.b), dtype=bool)
        inactive[active] = False
        if np.any(xn < prob.lower) or np.any(xn > prob.upper) or np.any(prob.slack(xn)[inactive] > 0) or np.any(nn < 0):
            break
        score = _kkt_residual(prob, xn, ln, nn) + abs(prob.eq(xn)) + float(np.sum(np.abs(prob.slack(xn)[active])))
        if not score < best:
            break
        x, lam, nu, best = xn, ln, nn, score
        done += 1
    return x, lam, nu, done


def maximize(
    fun: ScalarFn,
    grad: VectorFn,
    x0: Vector,
    lower: Vector,
    upper: Vector,
    eq: ScalarFn,
    eq_grad: VectorFn,
    A_ub: Optional[np.ndarray] = None,
    b_ub: Optional[Vector] = None,
    hess: Optional[MatrixFn] = None,
    eq_hess: Optional[MatrixFn] = None,
    gtol: float = 1e-12,
    ctol: float = 1e-10,
    max_iter: int = 10_000,
    max_outer: int = 60,
    penalty: float = 10.0,
) -> NLPResult:
    x = np.clip(np.asarray(x0, dtype=float), lower, upper)
    m = len(x)
    A = np.zeros((0, m)) if A_ub is None else np.atleast_2d(np.asarray(A_ub, dtype=float))
    b = np.zeros(0) if b_ub is None else np.asarray(b_ub, dtype=float)
    prob = _Problem(fun, grad, eq, eq_grad, np.asarray(lower, float), np.asarray(upper, float), A, b)

    jh = eq_grad(x)
    lam = float(np.dot(grad(x), jh) / np.dot(jh, jh)) if np.dot(jh, jh) > 0 else 0.0
    nu = np.zeros(len(b))
    mu = penalty
    history = [fun(x)]
    iterations = 0
    h_prev = abs(eq(x))
    inner_tol = 1e-3
    message = "outer iteration limit reached"

    for outer in range(max_outer):
        lam_k, mu_k, nu_k = lam, mu, nu.copy()

        def merit(z, lam_k=lam_k, mu_k=mu_k, nu_k=nu_k):
            h = eq(z)
            shifted = np.maximum(0.0, nu_k + mu_k * prob.slack(z))
            return -fun(z) + lam_k * h + 0.5 * mu_k * h * h + (np.dot(shifted, shifted) - np.dot(nu_k, nu_k)) / (2 * mu_k)

        def merit_grad(z, lam_k=lam_k, mu_k=mu_k, nu_k=nu_k):
            shifted = np.maximum(0.0, nu_k + mu_k * prob.slack(z))
            return -grad(z) + (lam_k + mu_k * eq(z)) * eq_grad(z) + A.T @ shifted

        budget = max_iter - iterations
        if budget <= 0:
            message = "iteration limit reached"
            break
        x, used, reached = _projected_bfgs(merit, merit_grad, prob, x, inner_tol, budget)
        iterations += used

        h = eq(x)
        lam = lam_k + mu_k * h
        nu = np.maximum(0.0, nu_k + mu_k * prob.slack(x))
        if abs(h) > ctol and abs(h) > 0.25 * h_prev:
            mu = min(mu * 10.0, 1e10)
        h_prev = abs(h)
        inner_tol = max(inner_tol * 0.1, gtol)
        history.append(fun(x))
        kkt = _kkt_residual(prob, x, lam, nu)
        log.debug("outer %d: f=%.16g |h|=%.3e kkt=%.3e mu=%.1e", outer, history[-1], abs(h), kkt, mu)
        if abs(h) <= ctol and kkt <= gtol:
            message = "converged"
            break
        if not reached and abs(h) <= ctol:
            message = "subproblem stalled at rounding level"
            break

    if hess is not None and eq_hess is not None:
        x, lam, nu, steps = _newton_kkt(prob, hess, eq_hess, x, lam, nu, min(8, max_iter - iterations))
        iterations += steps
        history.append(fun(x))

    h = eq(x)
    kkt = _kkt_residual(prob, x, lam, nu)
    violation = float(max(0.0, np.max(prob.slack(x)))) if len(b) else 0.0
    converged = abs(h) <= ctol and kkt <= gtol and violation <= ctol
    if converged:
        message = "converged"
    elif message == "converged":
        message = "lost feasibility during refinement"
    return NLPResult(
        x=x,
        fun=fun(x),
        eq_residual=abs(h),
        ineq_violation=violation,
        multiplier=lam,
        kkt_residual=kkt,
        iterations=iterations,
        converged=converged,
        message=message,
        history=history,
    )
