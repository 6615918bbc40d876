"""Gaps to the perimeter/width upper bounds, their asymptotics, and the
four summary tables.

Gaps are evaluated through half-angle identities: at n = 128 the perimeter
gap of D_n is about 5e-14, below the spacing of doubles near pi, so plain
subtraction of two perimeters would return mostly rounding error.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .constructions import bn_scalar_metrics, dn_closed_form, regular_closed_form, upper_bounds
from .graph import DiameterGraph, GraphClass, extract_diameter_graph
from .optimize import OptimizationResult, solve_bn_star, solve_dn_star
from .roots import delta0

__all__ = [
    "DiameterGraph",
    "GraphClass",
    "GapReport",
    "Table",
    "asymptotic_ratio_L",
    "asymptotic_ratio_W",
    "extract_diameter_graph",
    "gap_perimeter_bn",
    "gap_perimeter_dn",
    "gap_report",
    "gap_width_bn",
    "gap_width_dn",
    "lambda_star",
    "make_table",
]

TABLE_SIZES = {
    1: (16, 32, 64, 128),
    2: (16, 32, 64, 128, 256),
    3: (16, 32, 64),
    4: (16, 32, 64),
}


def gap_perimeter_dn(n: int) -> float:
    """``2n sin(pi/2n) - L(D_n)``, as ``4n sin(pi/2n) sin^2(delta0/4)``."""
    d = delta0(n).delta0
    return 4 * n * math.sin(math.pi / (2 * n)) * math.sin(d / 4) ** 2


def gap_width_dn(n: int) -> float:
    """``cos(pi/2n) - W(D_n)``, as ``2 sin(delta0/4) sin(pi/2n + delta0/4)``."""
    d = delta0(n).delta0
    return 2 * math.sin(d / 4) * math.sin(math.pi / (2 * n) + d / 4)


def _bn_shift(n: int) -> float:
    # pi/2n - asin(sin(2pi/n)/2)/2, the angle by which B_n falls short
    return math.pi / (2 * n) - 0.5 * math.asin(0.5 * math.sin(2 * math.pi / n))


def gap_perimeter_bn(n: int) -> float:
    bn_scalar_metrics(n)
    a = _bn_shift(n)
    return 4 * n * math.sin(math.pi / (2 * n)) * math.sin(a / 2) ** 2


def gap_width_bn(n: int) -> float:
    bn_scalar_metrics(n)
    a = _bn_shift(n)
    return 2 * math.sin((math.pi / (2 * n) + math.pi / n - 0.5 * math.asin(0.5 * math.sin(2 * math.pi / n))) / 2) * math.sin(a / 2)


def leading_gap_L(n: int) -> float:
    return math.pi**9 / (8 * n**8)


def leading_gap_W(n: int) -> float:
    return math.pi**5 / (4 * n**5)


def asymptotic_ratio_L(n: int) -> float:
    return gap_perimeter_dn(n) / leading_gap_L(n)


def asymptotic_ratio_W(n: int) -> float:
    return gap_width_dn(n) / leading_gap_W(n)


def correction_L(n: int) -> float:
    """Relative size of the second term of the perimeter gap series."""
    return 25 * math.pi**2 / (8 * n**2)


def correction_W(n: int) -> float:
    return 37 * math.pi**2 / (24 * n**2)


def lambda_star(result: OptimizationResult) -> float:
    """Fraction of ``[L(D_n), ub_L]`` covered by the D_n* perimeter."""
    return result.gain / gap_perimeter_dn(result.n)


@dataclass(frozen=True)
class GapReport:
    n: int
    ub_L: float
    ub_W: float
    gap_L: float
    gap_W: float
    fraction_L: float
    lambda_star: Optional[float]


def gap_report(n: int, with_optimum: bool = False) -> GapReport:
    ub_l, ub_w = upper_bounds(n)
    gap_l = gap_perimeter_dn(n)
    gap_b = gap_perimeter_bn(n)
    lam = lambda_star(solve_dn_star(n)) if with_optimum else None
    return GapReport(
        n=n,
        ub_L=ub_l,
        ub_W=ub_w,
        gap_L=gap_l,
        gap_W=gap_width_dn(n),
        fraction_L=(gap_b - gap_l) / gap_b,
        lambda_star=lam,
    )


@dataclass(frozen=True)
class Table:
    title: str
    header: tuple[str, ...]
    rows: tuple[tuple, ...]
    # decimals per column; None prints an integer
    decimals: tuple[Optional[int], ...]

    def formatted_rows(self) -> list[list[str]]:
        out = []
        for row in self.rows:
            out.append([str(v) if d is None else f"{v:.{d}f}" for v, d in zip(row, self.decimals)])
        return out

    def to_text(self) -> str:
        cells = [list(self.header)] + self.formatted_rows()
        widths = [max(len(r[i]) for r in cells) for i in range(len(self.header))]
        lines = [self.title]
        for r in cells:
            lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.formatted_rows())
        return buf.getvalue()


def _table1(sizes: Sequence[int]) -> Table:
    rows = []
    for n in sizes:
        gap_d, gap_b = gap_perimeter_dn(n), gap_perimeter_bn(n)
        rows.append(
            (n, regular_closed_form(n)[0], bn_scalar_metrics(n)[0], dn_closed_form(n)[0], upper_bounds(n)[0], (gap_b - gap_d) / gap_b)
        )
    return Table(
        "Perimeters of D_n",
        ("n", "L(R_n)", "L(B_n)", "L(D_n)", "ub_L", "frac"),
        tuple(rows),
        (None, 10, 10, 10, 10, 4),
    )


def _table2(sizes: Sequence[int]) -> Table:
    rows = []
    for n in sizes:
        gap_d, gap_b = gap_width_dn(n), gap_width_bn(n)
        rows.append(
            (n, regular_closed_form(n)[1], bn_scalar_metrics(n)[1], dn_closed_form(n)[1], upper_bounds(n)[1], (gap_b - gap_d) / gap_b)
        )
    return Table(
        "Widths of D_n",
        ("n", "W(R_n)", "W(B_n)", "W(D_n)", "ub_W", "frac"),
        tuple(rows),
        (None, 10, 10, 10, 10, 4),
    )


def _table3(sizes: Sequence[int], solver: Callable[[str, int], OptimizationResult]) -> Table:
    rows = []
    for n in sizes:
        b_star = solver("bn-star", n)
        d_star = solver("dn-star", n)
        for r in (b_star, d_star):
            if not r.converged:
                raise RuntimeError(f"{r.problem.value} n={n} did not converge: {r.message}")
        rows.append((n, b_star.objective, dn_closed_form(n)[0], d_star.objective, upper_bounds(n)[0], lambda_star(d_star)))
    return Table(
        "Perimeters of D_n*",
        ("n", "L(B_n*)", "L(D_n)", "L(D_n*)", "ub_L", "lambda*"),
        tuple(rows),
        (None, 10, 10, 10, 10, 4),
    )


def _table4(sizes: Sequence[int], solver: Callable[[str, int], OptimizationResult]) -> Table:
    rows = []
    for n in sizes:
        r = solver("dn-star", n)
        if not r.converged:
            raise RuntimeError(f"dn-star n={n} did not converge: {r.message}")
        a = r.alphas.alphas
        for i in range(len(a) // 6):
            rows.append((n, i, *a[6 * i : 6 * i + 6]))
    return Table(
        "Angles of D_n*",
        ("n", "i") + tuple(f"alpha_6i+{j}" for j in range(6)),
        tuple(rows),
        (None, None) + (10,) * 6,
    )


def _default_solver(problem: str, n: int) -> OptimizationResult:
    return solve_dn_star(n) if problem == "dn-star" else solve_bn_star(n)


def make_table(which: int, sizes: Optional[Sequence[int]] = None, solver=None) -> Table:
    if which not in TABLE_SIZES:
        raise ValueError(f"table must be one of 1, 2, 3, 4, got {which}")
    sizes = TABLE_SIZES[which] if sizes is None else tuple(sizes)
    if which == 1:
        return _table1(sizes)
    if which == 2:
        return _table2(sizes)
    solver = solver or _default_solver
    return _table3(sizes, solver) if which == 3 else _table4(sizes, solver)
