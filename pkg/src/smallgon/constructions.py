"""Polygon families: regular, Reinhardt, the closed-form B_n metrics, and the
angle-parametrized symmetric polygons (D_n and the optimized D_n*, B_n*)."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial import ConvexHull

from . import geometry
from .angles import AngleFamily, AngleVector, alternating_angles, chain, is_power_of_two, partial_sums
from .geometry import Metrics, Polygon
from .graph import DiameterGraph, extract_diameter_graph
from .roots import delta0


class DomainError(ValueError):
    """Parameters outside the family's domain (n, m)."""


class ConstructionError(RuntimeError):
    """The constructed vertex cycle is not convex."""

    def __init__(self, message: str, vertex: Optional[int] = None):
        super().__init__(message)
        self.vertex = vertex


class Family(str, enum.Enum):
    REGULAR = "regular"
    REINHARDT = "reinhardt"
    BN = "bn"
    DN = "dn"
    DN_STAR = "dn-star"
    BN_STAR = "bn-star"


@dataclass(frozen=True)
class ConstructionReport:
    polygon: Polygon
    family: Family
    metrics: Metrics
    diameter_graph: DiameterGraph
    delta: Optional[float] = None

    @property
    def n(self) -> int:
        return len(self.polygon)


def _report(poly: Polygon, family: Family, delta: Optional[float] = None) -> ConstructionReport:
    return ConstructionReport(
        polygon=poly,
        family=family,
        metrics=geometry.measure(poly),
        diameter_graph=extract_diameter_graph(poly),
        delta=delta,
    )


def _regular_vertices(n: int) -> np.ndarray:
    """Regular small n-gon with a vertex at the origin and its axis on x = 0."""
    radius = 0.5 if n % 2 == 0 else 0.5 / math.cos(math.pi / (2 * n))
    t = 2 * math.pi * np.arange(n) / n
    v = np.column_stack((radius * np.sin(t), radius * (1 - np.cos(t))))
    if n % 2 == 0:
        # the vertex opposite the origin, exactly at unit distance
        v[n // 2] = (0.0, 1.0)
    return v


def regular_small_ngon(n: int) -> ConstructionReport:
    if n < 3:
        raise DomainError(f"a polygon needs n >= 3, got {n}")
    return _report(Polygon(_regular_vertices(n)), Family.REGULAR)


def _start_at_lowest(v: np.ndarray) -> np.ndarray:
    start = int(np.lexsort((np.abs(v[:, 0]), v[:, 1]))[0])
    return np.roll(v, -start, axis=0)


def reinhardt_polygon(m: int, n: int) -> ConstructionReport:
    """Reinhardt n-gon from a Reuleaux m-gon with ``n/m - 1`` vertices per arc."""
    if m < 3 or m % 2 == 0:
        raise DomainError(f"m must be odd and >= 3, got {m}")
    if n < m or n % m:
        raise DomainError(f"m={m} must divide n={n}")
    base = _regular_vertices(m)
    per_arc = n // m
    points = [base]
    for i in range(m):
        a, b = base[i], base[(i + 1) % m]
        centre = base[(i + (m + 1) // 2) % m]
        start = math.atan2(a[1] - centre[1], a[0] - centre[0])
        end = math.atan2(b[1] - centre[1], b[0] - centre[0])
        sweep = math.remainder(end - start, 2 * math.pi)
        step = sweep / per_arc
        for k in range(1, per_arc):
            phi = start + k * step
            points.append(np.array([[centre[0] + math.cos(phi), centre[1] + math.sin(phi)]]))
    cloud = np.vstack(points)
    hull = ConvexHull(cloud)
    v = _start_at_lowest(cloud[hull.vertices])
    return _report(Polygon(v), Family.REINHARDT)


def bn_scalar_metrics(n: int) -> tuple[float, float]:
    """Perimeter and width of the closed-form B_n family."""
    if not is_power_of_two(n) or n < 4:
        raise DomainError(f"B_n needs n = 2**s with s >= 2, got {n}")
    b = 0.5 * math.asin(0.5 * math.sin(2 * math.pi / n))
    length = 2 * n * math.sin(math.pi / (2 * n)) * math.cos(math.pi / (2 * n) - b)
    width = math.cos(math.pi / n - b)
    return length, width


def _unit(theta: float) -> np.ndarray:
    return np.array([math.sin(theta), math.cos(theta)])


def angle_polygon_vertices(av: AngleVector) -> np.ndarray:
    """Unordered vertex set of the symmetric polygon described by ``av``."""
    c, a = av.coeffs, np.asarray(av.alphas)
    half = chain(c, a)
    theta = np.concatenate(([0.0], partial_sums(c, a)))
    pendants = []
    for k in range(1, len(half)):
        if c[k] == 2:
            # bisector of the angle at v_k, pointing away from the chain
            sign = 1.0 if k % 2 == 0 else -1.0
            pendants.append(half[k] + sign * _unit(theta[k] + a[k]))
    right = np.vstack([half[1:]] + ([np.array(pendants)] if pendants else []))
    left = right * np.array([-1.0, 1.0])
    return np.vstack(([[0.0, 0.0], [0.0, 1.0]], right, left))


def order_counterclockwise(points: np.ndarray) -> np.ndarray:
    """Sort by polar angle about the centroid, starting at the origin vertex."""
    origin = int(np.argmin(np.hypot(points[:, 0], points[:, 1])))
    rest = np.delete(points, origin, axis=0)
    centre = points.mean(axis=0)
    key = np.mod(np.arctan2(rest[:, 1] - centre[1], rest[:, 0] - centre[0]) + math.pi / 2, 2 * math.pi)
    return np.vstack((points[origin : origin + 1], rest[np.argsort(key, kind="stable")]))


def build_from_angles(
    av: AngleVector,
    family: Family | None = None,
    closure_tol: float = 1e-9,
    delta: Optional[float] = None,
) -> ConstructionReport:
    av.validate(closure_tol=closure_tol)
    v = order_counterclockwise(angle_polygon_vertices(av))
    poly = Polygon.raw(v)
    convex, _ = geometry.convexity(poly)
    if not convex:
        reflex = geometry.reflex_vertices(poly)
        where = reflex[0] if reflex else None
        raise ConstructionError(f"angle vector gives a non-convex polygon (vertex {where})", vertex=where)
    if family is None:
        family = Family.DN if av.family is AngleFamily.D else Family.BN_STAR
    return _report(poly, Family(family), delta=delta)


def dn_angles(n: int) -> AngleVector:
    return alternating_angles(n, delta0(n).delta0)


def build_dn(n: int) -> ConstructionReport:
    if not is_power_of_two(n) or n < 16:
        raise DomainError(f"D_n needs n = 2**s with s >= 4, got {n}")
    d = delta0(n).delta0
    return build_from_angles(alternating_angles(n, d), Family.DN, delta=d)


def dn_closed_form(n: int) -> tuple[float, float]:
    """Perimeter and width of D_n from delta0(n)."""
    d = delta0(n).delta0
    return (
        2 * n * math.sin(math.pi / (2 * n)) * math.cos(d / 2),
        math.cos(math.pi / (2 * n) + d / 2),
    )


def upper_bounds(n: int) -> tuple[float, float]:
    """Perimeter and width bounds for any convex small n-gon."""
    return 2 * n * math.sin(math.pi / (2 * n)), math.cos(math.pi / (2 * n))


def regular_closed_form(n: int) -> tuple[float, float]:
    if n % 2:
        return upper_bounds(n)
    return n * math.sin(math.pi / n), math.cos(math.pi / n)
