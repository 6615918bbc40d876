"""Half-polygon turning angles for the symmetric diameter-graph families.

Both families share one layout. A cycle starts at ``v0 = (0, 0)`` and zig-zags
across the axis of symmetry; the angle at cycle vertex ``k`` between its two
unit-length cycle edges is ``c[k] * alphas[k]``. With the partial sums
``theta[k] = sum(c[i] * alphas[i] for i < k)`` the chain is

    v[k] = sum((-1)**(i - 1) * (sin(theta[i]), cos(theta[i])) for i in 1..k)

and the last chain vertex must sit at ``x = target`` so that the edge to its
mirror image is horizontal and of unit length. Vertices with ``c[k] == 2``
carry a pendant unit edge along the bisector of their angle.

D-family (``n = 2**s``, ``s >= 4``): ``3n/8`` angles, ``c[k] = 2`` iff
``k % 3 == 1``, chain end at ``x = +1/2``.

B-family (``s >= 3``): ``n/4 + 1`` angles, ``c = [1, 2, ..., 2, 1]``, chain end
at ``x = -1/2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

ANGLE_SUM = math.pi / 2
SUM_TOL = 1e-12


class InfeasibleAnglesError(ValueError):
    """The angle vector violates a bound, the angle sum or the closure."""


class AngleFamily(str, enum.Enum):
    D = "D"
    B = "B"


def is_power_of_two(n: int) -> bool:
    return isinstance(n, (int, np.integer)) and n > 0 and (n & (n - 1)) == 0


def _check_n(family: AngleFamily, n: int) -> None:
    minimum = 16 if family is AngleFamily.D else 8
    if not is_power_of_two(n) or n < minimum:
        raise ValueError(f"{family.value}-family needs n a power of two >= {minimum}, got {n}")


def coefficients(family: AngleFamily, n: int) -> np.ndarray:
    _check_n(family, n)
    if family is AngleFamily.D:
        k = np.arange(3 * n // 8)
        return np.where(k % 3 == 1, 2.0, 1.0)
    c = np.full(n // 4 + 1, 2.0)
    c[0] = c[-1] = 1.0
    return c


def upper_bounds(family: AngleFamily, n: int) -> np.ndarray:
    c = coefficients(family, n)
    if family is AngleFamily.D:
        return (math.pi / 3) / c
    ub = np.full(len(c), math.pi / 6)
    ub[-1] = math.pi / 3
    return ub


def closure_target(family: AngleFamily) -> float:
    return 0.5 if family is AngleFamily.D else -0.5


def partial_sums(c: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    """``theta[1..K-1]``; ``theta[K]`` is the angle sum and is not part of the chain."""
    return np.cumsum(c * alphas)[:-1]


def _signs(m: int) -> np.ndarray:
    return np.where(np.arange(m) % 2 == 0, 1.0, -1.0)


def chain(c: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    """Cycle vertices ``v[0..K-1]`` of the right-hand half chain."""
    theta = partial_sums(c, alphas)
    s = _signs(len(theta))
    steps = s[:, None] * np.column_stack((np.sin(theta), np.cos(theta)))
    return np.vstack(([0.0, 0.0], np.cumsum(steps, axis=0)))


def closure(c: np.ndarray, alphas: np.ndarray, target: float) -> float:
    theta = partial_sums(c, alphas)
    return math.fsum(_signs(len(theta)) * np.sin(theta)) - target


def closure_grad(c: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    theta = partial_sums(c, alphas)
    terms = _signs(len(theta)) * np.cos(theta)
    # alpha_i enters theta_k for every k > i
    tail = np.cumsum(terms[::-1])[::-1]
    g = np.zeros(len(alphas))
    g[: len(tail)] = tail
    return c * g


def closure_hess(c: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    theta = partial_sums(c, alphas)
    terms = _signs(len(theta)) * np.sin(theta)
    tail = np.zeros(len(alphas))
    tail[: len(theta)] = np.cumsum(terms[::-1])[::-1]
    idx = np.arange(len(alphas))
    shared = tail[np.maximum.outer(idx, idx)]
    return -np.outer(c, c) * shared


def half_perimeter_terms(c: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    return 4.0 * c * np.sin(alphas / 2)


def angle_perimeter(c: np.ndarray, alphas: np.ndarray) -> float:
    """Perimeter of the symmetric polygon, ``sum(4 c_k sin(alpha_k / 2))``."""
    return math.fsum(half_perimeter_terms(c, alphas))


def angle_perimeter_grad(c: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    return 2.0 * c * np.cos(alphas / 2)


def angle_perimeter_hess(c: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    return np.diag(-c * np.sin(alphas / 2))


def perimeter_difference(c: np.ndarray, alphas: np.ndarray, base: np.ndarray) -> float:
    """``angle_perimeter(alphas) - angle_perimeter(base)`` without cancellation."""
    terms = 8.0 * c * np.cos((alphas + base) / 4) * np.sin((alphas - base) / 4)
    return math.fsum(terms)


def angle_width(alphas: np.ndarray) -> float:
    return float(np.min(np.cos(np.asarray(alphas) / 2)))


@dataclass(frozen=True)
class AngleVector:
    """Turning angles of one half polygon, with their multiplicities."""

    n: int
    family: AngleFamily
    alphas: np.ndarray

    def __post_init__(self):
        family = AngleFamily(self.family)
        _check_n(family, self.n)
        a = np.array(self.alphas, dtype=float)
        expected = len(coefficients(family, self.n))
        if a.shape != (expected,):
            raise ValueError(f"{family.value}-family n={self.n} needs {expected} angles, got {a.shape}")
        a.setflags(write=False)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "alphas", a)

    @property
    def coeffs(self) -> np.ndarray:
        return coefficients(self.family, self.n)

    @property
    def target(self) -> float:
        return closure_target(self.family)

    def angle_sum_residual(self) -> float:
        return math.fsum(self.coeffs * self.alphas) - ANGLE_SUM

    def closure_residual(self) -> float:
        return closure(self.coeffs, self.alphas, self.target)

    def perimeter(self) -> float:
        return angle_perimeter(self.coeffs, self.alphas)

    def width(self) -> float:
        return angle_width(self.alphas)

    def validate(self, closure_tol: float = 1e-9) -> None:
        a = self.alphas
        ub = upper_bounds(self.family, self.n)
        bad = np.flatnonzero((a < -SUM_TOL) | (a > ub + SUM_TOL))
        if bad.size:
            k = int(bad[0])
            raise InfeasibleAnglesError(f"alpha_{k} = {a[k]!r} outside [0, {ub[k]!r}]")
        if abs(self.angle_sum_residual()) > SUM_TOL:
            raise InfeasibleAnglesError(f"angle sum off by {self.angle_sum_residual():.3e}")
        if abs(self.closure_residual()) > closure_tol:
            raise InfeasibleAnglesError(f"closure residual {self.closure_residual():.3e} exceeds {closure_tol:g}")


def alternating_angles(n: int, delta: float) -> AngleVector:
    """D-family angles ``pi/n + (-1)**k * delta``."""
    k = np.arange(3 * n // 8)
    return AngleVector(n, AngleFamily.D, math.pi / n + np.where(k % 2 == 0, delta, -delta))


def uniform_angles(family: AngleFamily, n: int) -> AngleVector:
    """All angles equal to ``pi/n``; satisfies the angle sum for both families."""
    c = coefficients(family, n)
    return AngleVector(n, family, np.full(len(c), math.pi / n))
