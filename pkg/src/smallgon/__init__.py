"""Convex small polygons with 2**s vertices and near-maximal perimeter and width."""

from .angles import AngleFamily, AngleVector, InfeasibleAnglesError
from .constructions import (
    ConstructionError,
    ConstructionReport,
    DomainError,
    Family,
    bn_scalar_metrics,
    build_dn,
    build_from_angles,
    regular_small_ngon,
    reinhardt_polygon,
)
from .geometry import InvalidPolygonError, Metrics, NotConvexError, Point2, Polygon, diameter, is_convex, perimeter, width
from .graph import DiameterGraph, GraphClass, extract_diameter_graph
from .optimize import OptimizationResult, Problem, solve_bn_star, solve_dn_star
from .roots import RootMethod, RootResult, delta0

__version__ = "0.1.0"
