"""Measures and predicates for planar convex polygons.

All lengths are in diameter units, so every comparison uses the absolute
tolerance ``TOL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

TOL = 1e-12


class InvalidPolygonError(ValueError):
    """Raised for vertex lists that do not describe a polygon."""


class NotConvexError(ValueError):
    """Raised when an operation that needs a convex polygon gets another."""


class Point2(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Polygon:
    """Immutable vertex cycle, stored counterclockwise.

    Clockwise input is reversed on construction; use ``Polygon.raw`` to skip
    the reorientation.
    """

    vertices: np.ndarray

    def __init__(self, vertices: Iterable[Sequence[float]], *, orient: bool = True):
        pts = np.array([[float(v[0]), float(v[1])] for v in vertices], dtype=float)
        if pts.ndim != 2 or len(pts) < 3:
            raise InvalidPolygonError(f"a polygon needs at least 3 vertices, got {len(pts)}")
        if not np.all(np.isfinite(pts)):
            raise InvalidPolygonError("vertex coordinates must be finite")
        step = np.roll(pts, -1, axis=0) - pts
        short = np.flatnonzero(np.hypot(step[:, 0], step[:, 1]) <= TOL)
        if short.size:
            raise InvalidPolygonError(f"vertices {int(short[0])} and {(int(short[0]) + 1) % len(pts)} coincide")
        if orient and signed_area(pts) < 0:
            pts = pts[::-1].copy()
        pts.setflags(write=False)
        object.__setattr__(self, "vertices", pts)

    @classmethod
    def raw(cls, vertices: Iterable[Sequence[float]]) -> "Polygon":
        return cls(vertices, orient=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def points(self) -> list[Point2]:
        return [Point2(float(x), float(y)) for x, y in self.vertices]

    def transformed(self, angle: float, shift: tuple[float, float] = (0.0, 0.0)) -> "Polygon":
        """Rotate by ``angle`` about the origin, then translate by ``shift``."""
        c, s = math.cos(angle), math.sin(angle)
        rot = np.array([[c, -s], [s, c]])
        return Polygon(self.vertices @ rot.T + np.asarray(shift, dtype=float))


@dataclass(frozen=True)
class Metrics:
    perimeter: float
    width: float
    diameter: float
    is_convex: bool
    is_small: bool


def _coords(p: Polygon | np.ndarray) -> np.ndarray:
    return p.vertices if isinstance(p, Polygon) else np.asarray(p, dtype=float)


def signed_area(p: Polygon | np.ndarray) -> float:
    v = _coords(p)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def perimeter(p: Polygon) -> float:
    v = _coords(p)
    if len(v) < 3:
        raise InvalidPolygonError("a polygon needs at least 3 vertices")
    d = np.roll(v, -1, axis=0) - v
    return math.fsum(np.hypot(d[:, 0], d[:, 1]))


def pairwise_distances(p: Polygon) -> np.ndarray:
    v = _coords(p)
    d = v[:, None, :] - v[None, :, :]
    return np.hypot(d[..., 0], d[..., 1])


def diameter(p: Polygon) -> float:
    """Largest vertex-to-vertex distance by exhaustive scan of all pairs."""
    v = _coords(p)
    if len(v) < 3:
        raise InvalidPolygonError("a polygon needs at least 3 vertices")
    return float(pairwise_distances(v).max())


def diameter_calipers(p: Polygon) -> float:
    """Diameter by rotating calipers over the (counterclockwise, convex) vertex cycle."""
    v = _coords(p)
    n = len(v)

    def area2(i, j, k):
        return (v[j, 0] - v[i, 0]) * (v[k, 1] - v[i, 1]) - (v[j, 1] - v[i, 1]) * (v[k, 0] - v[i, 0])

    best = 0.0
    j = 1
    for i in range(n):
        i1 = (i + 1) % n
        while area2(i, i1, (j + 1) % n) > area2(i, i1, j):
            j = (j + 1) % n
        for a in (i, i1):
            for b in (j, (j + 1) % n):
                best = max(best, math.hypot(v[a, 0] - v[b, 0], v[a, 1] - v[b, 1]))
    return best


def convexity(p: Polygon) -> tuple[bool, list[int]]:
    """Return ``(is_convex, collinear)`` where ``collinear`` lists flat vertices.

    A vertex is flat when its turn cross product is within ``TOL`` of zero;
    flat vertices do not break convexity. The turning must also total one
    full revolution, which rules out self-overlapping star shapes.
    """
    v = _coords(p)
    e_in = v - np.roll(v, 1, axis=0)
    e_out = np.roll(v, -1, axis=0) - v
    cross = e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0]
    flat = [int(i) for i in np.flatnonzero(np.abs(cross) <= TOL)]
    turning = cross[np.abs(cross) > TOL]
    if turning.size == 0:
        return False, flat
    if not (np.all(turning > 0) or np.all(turning < 0)):
        return False, flat
    dots = e_in[:, 0] * e_out[:, 0] + e_in[:, 1] * e_out[:, 1]
    total = float(np.sum(np.arctan2(cross, dots)))
    return abs(abs(total) - 2 * math.pi) < 1e-6, flat


def is_convex(p: Polygon) -> bool:
    return convexity(p)[0]


def reflex_vertices(p: Polygon) -> list[int]:
    """Indices whose turn opposes the polygon's orientation."""
    v = _coords(p)
    e_in = v - np.roll(v, 1, axis=0)
    e_out = np.roll(v, -1, axis=0) - v
    cross = e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0]
    sign = 1.0 if signed_area(v) >= 0 else -1.0
    return [int(i) for i in np.flatnonzero(sign * cross < -TOL)]


def side_heights(p: Polygon) -> np.ndarray:
    """For each side ``(v[i], v[i+1])``, the farthest vertex distance to its line."""
    v = _coords(p)
    a = v
    d = np.roll(v, -1, axis=0) - v
    length = np.hypot(d[:, 0], d[:, 1])
    rel = v[None, :, :] - a[:, None, :]
    dist = np.abs(d[:, None, 0] * rel[..., 1] - d[:, None, 1] * rel[..., 0]) / length[:, None]
    return dist.max(axis=1)


def width(p: Polygon) -> float:
    if not is_convex(p):
        raise NotConvexError("width is only defined here for convex polygons")
    return float(side_heights(p).min())


def measure(p: Polygon) -> Metrics:
    convex = is_convex(p)
    diam = diameter(p)
    w = float(side_heights(p).min()) if convex else float("nan")
    return Metrics(
        perimeter=perimeter(p),
        width=w,
        diameter=diam,
        is_convex=convex,
        is_small=abs(diam - 1.0) <= TOL,
    )
