"""Polygon documents (JSON), vertex CSV dumps and SVG rendering."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .constructions import ConstructionReport
from .geometry import Polygon

SCHEMA_VERSION = "1.0"
PX_PER_UNIT = 500.0
PADDING = 0.05


class DocumentError(ValueError):
    """Malformed polygon document or vertex file."""


@dataclass(frozen=True)
class PolygonDocument:
    family: str
    n: int
    vertices: tuple[tuple[float, float], ...]
    perimeter: float
    width: float
    diameter: float
    edges: tuple[tuple[int, int], ...]
    cycle_length: int
    pendant_count: int
    schema_version: str = SCHEMA_VERSION

    @classmethod
    def from_report(cls, report: ConstructionReport) -> "PolygonDocument":
        g = report.diameter_graph
        return cls(
            family=report.family.value,
            n=report.n,
            vertices=tuple((float(x), float(y)) for x, y in report.polygon.vertices),
            perimeter=report.metrics.perimeter,
            width=report.metrics.width,
            diameter=report.metrics.diameter,
            edges=tuple(g.edges),
            cycle_length=g.cycle_length,
            pendant_count=g.pendant_count,
        )

    def polygon(self) -> Polygon:
        return Polygon(self.vertices)


def _num(x: float) -> str:
    if not math.isfinite(x):
        raise DocumentError(f"cannot serialize non-finite value {x!r}")
    # + 0.0 folds -0.0, which would not survive a parse/serialize cycle
    return format(float(x) + 0.0, ".17g")


def dumps(doc: PolygonDocument) -> str:
    """Serialize with 17 significant digits; stable under parse/serialize."""
    vertex_lines = ",\n".join(f"    [{_num(x)}, {_num(y)}]" for x, y in doc.vertices)
    edge_list = ", ".join(f"[{a}, {b}]" for a, b in doc.edges)
    return (
        "{\n"
        f'  "schema_version": {json.dumps(doc.schema_version)},\n'
        f'  "family": {json.dumps(doc.family)},\n'
        f'  "n": {int(doc.n)},\n'
        f'  "vertices": [\n{vertex_lines}\n  ],\n'
        '  "metrics": {\n'
        f'    "perimeter": {_num(doc.perimeter)},\n'
        f'    "width": {_num(doc.width)},\n'
        f'    "diameter": {_num(doc.diameter)}\n'
        "  },\n"
        '  "diameter_graph": {\n'
        f'    "edges": [{edge_list}],\n'
        f'    "cycle_length": {int(doc.cycle_length)},\n'
        f'    "pendant_count": {int(doc.pendant_count)}\n'
        "  }\n"
        "}\n"
    )


def _field(obj: dict, key: str, kind) -> Any:
    if key not in obj:
        raise DocumentError(f"missing field {key!r}")
    value = obj[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise DocumentError(f"field {key!r} must be a number")
        return float(value)
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise DocumentError(f"field {key!r} must be an integer")
        return value
    if not isinstance(value, kind):
        raise DocumentError(f"field {key!r} must be {kind.__name__}")
    return value


def loads(text: str) -> PolygonDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    verts = _field(raw, "vertices", list)
    pairs = []
    for v in verts:
        if not (isinstance(v, list) and len(v) == 2 and all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)):
            raise DocumentError(f"bad vertex entry {v!r}")
        pairs.append((float(v[0]), float(v[1])))
    n = _field(raw, "n", int)
    if n != len(pairs) or n < 3:
        raise DocumentError(f"n={n} does not match {len(pairs)} vertices")
    metrics = _field(raw, "metrics", dict)
    graph = _field(raw, "diameter_graph", dict)
    edges = []
    for e in _field(graph, "edges", list):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(i, int) and 0 <= i < n for i in e)):
            raise DocumentError(f"bad edge entry {e!r}")
        edges.append((e[0], e[1]))
    return PolygonDocument(
        schema_version=_field(raw, "schema_version", str),
        family=_field(raw, "family", str),
        n=n,
        vertices=tuple(pairs),
        perimeter=_field(metrics, "perimeter", float),
        width=_field(metrics, "width", float),
        diameter=_field(metrics, "diameter", float),
        edges=tuple(edges),
        cycle_length=_field(graph, "cycle_length", int),
        pendant_count=_field(graph, "pendant_count", int),
    )


def vertices_csv(vertices) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("x", "y"))
    for x, y in vertices:
        w.writerow((_num(x), _num(y)))
    return buf.getvalue()


def parse_vertices_csv(text: str) -> list[tuple[float, float]]:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if rows and rows[0] == ["x", "y"]:
        rows = rows[1:]
    try:
        pts = [(float(a), float(b)) for a, b in rows]
    except ValueError as exc:
        raise DocumentError(f"bad vertex row: {exc}") from exc
    if len(pts) < 3:
        raise DocumentError("need at least 3 vertex rows")
    return pts


def read_polygon_file(path: Path) -> PolygonDocument | list[tuple[float, float]]:
    text = Path(path).read_text()
    if not text.strip():
        raise DocumentError(f"{path} is empty")
    if text.lstrip().startswith("{"):
        return loads(text)
    return parse_vertices_csv(text)


def render_svg(doc: PolygonDocument) -> str:
    """Dashed boundary, solid unit-distance edges; 1 unit = 500 px, 5% margin."""
    xs = [v[0] for v in doc.vertices]
    ys = [v[1] for v in doc.vertices]
    span_x, span_y = max(xs) - min(xs), max(ys) - min(ys)
    pad_x, pad_y = PADDING * span_x, PADDING * span_y
    x0, y1 = min(xs) - pad_x, max(ys) + pad_y
    w = (span_x + 2 * pad_x) * PX_PER_UNIT
    h = (span_y + 2 * pad_y) * PX_PER_UNIT

    def px(p):
        return (p[0] - x0) * PX_PER_UNIT, (y1 - p[1]) * PX_PER_UNIT

    def line(a, b, cls, style):
        (ax, ay), (bx, by) = px(a), px(b)
        return f'  <line class="{cls}" x1="{ax:.4f}" y1="{ay:.4f}" x2="{bx:.4f}" y2="{by:.4f}" {style}/>'

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.4f}" height="{h:.4f}" '
        f'viewBox="0 0 {w:.4f} {h:.4f}">',
        f"  <title>{doc.family} n={doc.n}</title>",
    ]
    dashed = 'stroke="black" stroke-width="1.5" stroke-dasharray="6,4" fill="none"'
    solid = 'stroke="black" stroke-width="1.5"'
    v = doc.vertices
    for i in range(len(v)):
        out.append(line(v[i], v[(i + 1) % len(v)], "boundary", dashed))
    for a, b in doc.edges:
        out.append(line(v[a], v[b], "diameter", solid))
    out.append("</svg>")
    return "\n".join(out) + "\n"
