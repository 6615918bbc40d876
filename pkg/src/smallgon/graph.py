"""Unit-distance (diameter) graphs of small polygons."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .geometry import Polygon, pairwise_distances


class GraphClass(str, enum.Enum):
    D_FAMILY = "DFamily"
    B_FAMILY = "BFamily"
    OTHER = "Other"


@dataclass(frozen=True)
class DiameterGraph:
    edges: tuple[tuple[int, int], ...]
    cycle_length: int
    pendant_count: int
    classification: GraphClass

    @property
    def edge_count(self) -> int:
        return len(self.edges)


class _DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        self.parent[ri] = rj
        return True


def unit_distance_edges(p: Polygon, tol: float = 1e-9) -> list[tuple[int, int]]:
    dist = pairwise_distances(p)
    i, j = np.nonzero(np.triu(np.abs(dist - 1.0) <= tol, k=1))
    return [(int(a), int(b)) for a, b in zip(i, j)]


def _single_cycle_length(n: int, edges: list[tuple[int, int]]) -> int:
    """Length of ``edges`` if they form exactly one simple cycle, else 0."""
    if not edges:
        return 0
    degree: dict[int, int] = {}
    for a, b in edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    if any(d != 2 for d in degree.values()):
        return 0
    dsu = _DisjointSet(n)
    closing = 0
    for a, b in edges:
        if not dsu.union(a, b):
            closing += 1
    roots = {dsu.find(v) for v in degree}
    if closing != 1 or len(roots) != 1:
        return 0
    return len(edges)


def classify(n: int, cycle_length: int, pendant_count: int, edge_count: int) -> GraphClass:
    if cycle_length == 0 or cycle_length + pendant_count != edge_count or n % 8:
        return GraphClass.OTHER
    if n >= 16 and (cycle_length, pendant_count) == (3 * n // 4 - 1, n // 4 + 1):
        return GraphClass.D_FAMILY
    if (cycle_length, pendant_count) == (n // 2 + 1, n // 2 - 1):
        return GraphClass.B_FAMILY
    return GraphClass.OTHER


def extract_diameter_graph(p: Polygon, tol: float = 1e-9) -> DiameterGraph:
    """Unit-distance edges of ``p``, split into one cycle plus pendant edges.

    Pendant edges are those touching a degree-1 vertex; the rest must form a
    single simple cycle for the graph to be classified as a family member.
    """
    n = len(p)
    edges = unit_distance_edges(p, tol)
    degree = np.zeros(n, dtype=int)
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    pendant = [e for e in edges if degree[e[0]] == 1 or degree[e[1]] == 1]
    core = [e for e in edges if degree[e[0]] > 1 and degree[e[1]] > 1]
    cycle = _single_cycle_length(n, core)
    if cycle == 0:
        return DiameterGraph(tuple(edges), 0, len(pendant), GraphClass.OTHER)
    return DiameterGraph(
        edges=tuple(edges),
        cycle_length=cycle,
        pendant_count=len(pendant),
        classification=classify(n, cycle, len(pendant), len(edges)),
    )
