"""The alternation amplitude delta0(n) of the D_n angle pattern.

With ``alpha_k = pi/n + (-1)**k * delta`` the chain-closure condition
reduces to one transcendental equation in ``delta``; it has a closed-form
root, and a bracketed bisection serves as an independent check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .angles import is_power_of_two


class RootMethod(str, enum.Enum):
    CLOSED_FORM = "closed-form"
    BISECTION = "bisection"


class BracketError(ArithmeticError):
    """The closure equation does not change sign on the search interval."""


@dataclass(frozen=True)
class RootResult:
    n: int
    delta0: float
    residual: float
    method: RootMethod


def _require_n(n: int) -> None:
    if not is_power_of_two(n) or n < 16:
        raise ValueError(f"delta0 needs n = 2**s with s >= 4, got {n}")


def closure_equation(n: int, delta: float) -> float:
    """Left minus right side of the closure equation; zero at delta0(n).

    Strictly decreasing in ``delta`` on ``(0, pi/n)``.
    """
    a = math.pi / n
    return (
        math.sin(a) * math.cos(delta) / math.cos(2 * a)
        - math.cos(a) * math.sin(delta) / math.sin(2 * a)
        - math.sin(2 * a) / (2 * math.cos(2 * a))
    )


def closure_equation_derivative(n: int, delta: float) -> float:
    a = math.pi / n
    return -math.sin(a) * math.sin(delta) / math.cos(2 * a) - math.cos(a) * math.cos(delta) / math.sin(2 * a)


def delta0_closed_form(n: int) -> float:
    """Closed-form root; evaluated without the power-of-two precondition."""
    a = math.pi / n
    s1, s2 = math.sin(a), math.sin(2 * a)
    return math.atan(math.tan(2 * a) * math.tan(a)) - math.asin(s2 * s1 / math.sqrt(4 * s1 * s1 + math.cos(4 * a)))


def delta0_bisection(n: int, max_iter: int = 200) -> float:
    lo, hi = 1e-18, math.pi / n - 1e-18
    f_lo, f_hi = closure_equation(n, lo), closure_equation(n, hi)
    if not (f_lo > 0 > f_hi):
        raise BracketError(f"no sign change on ({lo}, {hi}) for n={n}: f = {f_lo}, {f_hi}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = closure_equation(n, mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if f_mid > 0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    # one Newton polish step, kept only if it stays in the bracket
    polished = root - closure_equation(n, root) / closure_equation_derivative(n, root)
    if lo <= polished <= hi and abs(closure_equation(n, polished)) <= abs(closure_equation(n, root)):
        root = polished
    return root


def delta0(n: int, method: RootMethod | str = RootMethod.CLOSED_FORM) -> RootResult:
    _require_n(n)
    method = RootMethod(method)
    if method is RootMethod.CLOSED_FORM:
        d = delta0_closed_form(n)
    else:
        d = delta0_bisection(n)
    return RootResult(n=n, delta0=d, residual=closure_equation(n, d), method=method)
