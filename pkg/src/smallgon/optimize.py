"""Perimeter maximization over the angle parametrizations (D_n* and B_n*).

The linear angle-sum constraint is removed by solving for the last angle,
which never enters the closure constraint. The objective is the perimeter
gain over the warm start, computed with a sum-to-product identity so that
gains of order 1e-12 stay resolvable against perimeters near pi.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import angles
from .angles import AngleFamily, AngleVector
from .nlp import NLPResult, maximize
from .roots import delta0, delta0_closed_form

DEFAULT_STARTS = 5
# gains closer than this are the same optimum; the earlier start wins
GAIN_TIE = 1e-15


class Problem(str, enum.Enum):
    DN_STAR = "dn-star"
    BN_STAR = "bn-star"


@dataclass(frozen=True)
class OptimizationResult:
    n: int
    problem: Problem
    alphas: AngleVector
    objective: float
    residual_closure: float
    residual_anglesum: float
    iterations: int
    converged: bool
    gain: float
    warm_start_objective: float
    kkt_residual: float
    multiplier: float
    message: str
    history: tuple[float, ...] = field(default=())
    start: int = 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "problem": self.problem.value,
            "family": self.alphas.family.value,
            "alphas": [float(a) for a in self.alphas.alphas],
            "objective": self.objective,
            "gain": self.gain,
            "warm_start_objective": self.warm_start_objective,
            "residual_closure": self.residual_closure,
            "residual_anglesum": self.residual_anglesum,
            "kkt_residual": self.kkt_residual,
            "multiplier": self.multiplier,
            "iterations": self.iterations,
            "converged": self.converged,
            "message": self.message,
            "start": self.start,
        }


class AngleProblem:
    """Reduced problem in the first ``K - 1`` angles."""

    def __init__(self, family: AngleFamily, n: int, base: np.ndarray):
        self.family = family
        self.n = n
        self.c = angles.coefficients(family, n)
        self.ub = angles.upper_bounds(family, n)
        self.target = angles.closure_target(family)
        self.base = np.asarray(base, dtype=float)
        k = len(self.c)
        # d(alphas)/dx
        self.Z = np.vstack((np.eye(k - 1), -self.c[:-1] / self.c[-1]))

    def full(self, x: np.ndarray) -> np.ndarray:
        last = (angles.ANGLE_SUM - math.fsum(self.c[:-1] * x)) / self.c[-1]
        return np.append(x, last)

    def reduce(self, alphas: np.ndarray) -> np.ndarray:
        return np.asarray(alphas, dtype=float)[:-1].copy()

    def gain(self, x: np.ndarray) -> float:
        return angles.perimeter_difference(self.c, self.full(x), self.base)

    def gain_grad(self, x: np.ndarray) -> np.ndarray:
        return self.Z.T @ angles.angle_perimeter_grad(self.c, self.full(x))

    def gain_hess(self, x: np.ndarray) -> np.ndarray:
        return self.Z.T @ angles.angle_perimeter_hess(self.c, self.full(x)) @ self.Z

    def closure(self, x: np.ndarray) -> float:
        return angles.closure(self.c, self.full(x), self.target)

    def closure_grad(self, x: np.ndarray) -> np.ndarray:
        return self.Z.T @ angles.closure_grad(self.c, self.full(x))

    def closure_hess(self, x: np.ndarray) -> np.ndarray:
        return self.Z.T @ angles.closure_hess(self.c, self.full(x)) @ self.Z

    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        return np.zeros(len(self.c) - 1), self.ub[:-1].copy()

    def last_angle_constraints(self) -> tuple[np.ndarray, np.ndarray]:
        """``A x <= b`` encoding ``0 <= alpha_last <= ub_last``."""
        row = self.c[:-1]
        A = np.vstack((row, -row))
        b = np.array([angles.ANGLE_SUM, self.ub[-1] * self.c[-1] - angles.ANGLE_SUM])
        return A, b

    def solve(self, start: np.ndarray, **options) -> NLPResult:
        lower, upper = self.bounds()
        A, b = self.last_angle_constraints()
        return maximize(
            self.gain,
            self.gain_grad,
            self.reduce(start),
            lower,
            upper,
            self.closure,
            self.closure_grad,
            A_ub=A,
            b_ub=b,
            hess=self.gain_hess,
            eq_hess=self.closure_hess,
            **options,
        )


def _require(problem: Problem, n: int) -> None:
    minimum = 16 if problem is Problem.DN_STAR else 8
    if not angles.is_power_of_two(n) or n < minimum:
        raise ValueError(f"{problem.value} needs n = 2**s >= {minimum}, got {n}")


def warm_start(problem: Problem, n: int) -> AngleVector:
    _require(problem, n)
    if problem is Problem.DN_STAR:
        return angles.alternating_angles(n, delta0(n).delta0)
    return angles.uniform_angles(AngleFamily.B, n)


def _to_result(problem: Problem, prob: AngleProblem, res: NLPResult, start: int, warm: AngleVector) -> OptimizationResult:
    av = AngleVector(prob.n, prob.family, prob.full(res.x))
    return OptimizationResult(
        n=prob.n,
        problem=problem,
        alphas=av,
        objective=av.perimeter(),
        residual_closure=abs(av.closure_residual()),
        residual_anglesum=abs(av.angle_sum_residual()),
        iterations=res.iterations,
        converged=res.converged and abs(av.angle_sum_residual()) <= angles.SUM_TOL,
        gain=angles.perimeter_difference(prob.c, av.alphas, warm.alphas),
        warm_start_objective=warm.perimeter(),
        kkt_residual=res.kkt_residual,
        multiplier=res.multiplier,
        message=res.message,
        history=tuple(res.history),
        start=start,
    )


def solve(problem: Problem | str, n: int, starts: int = DEFAULT_STARTS, seed: int = 0, **options) -> OptimizationResult:
    """Best of the warm start and ``starts`` randomly perturbed copies of it."""
    problem = Problem(problem)
    warm = warm_start(problem, n)
    prob = AngleProblem(warm.family, n, warm.alphas)
    scale = delta0_closed_form(n)
    rng = np.random.default_rng(seed)
    lower, upper = prob.bounds()

    best: OptimizationResult | None = None
    for i in range(starts + 1):
        x0 = warm.alphas.copy()
        if i:
            x0[:-1] = np.clip(x0[:-1] + rng.normal(scale=scale, size=len(x0) - 1), lower, upper)
        candidate = _to_result(problem, prob, prob.solve(x0, **options), i, warm)
        if best is None:
            best = candidate
        elif candidate.converged and (not best.converged or candidate.gain > best.gain + GAIN_TIE):
            best = candidate
    return best


def solve_dn_star(n: int, starts: int = DEFAULT_STARTS, seed: int = 0, **options) -> OptimizationResult:
    return solve(Problem.DN_STAR, n, starts=starts, seed=seed, **options)


def solve_bn_star(n: int, starts: int = DEFAULT_STARTS, seed: int = 0, **options) -> OptimizationResult:
    return solve(Problem.BN_STAR, n, starts=starts, seed=seed, **options)
