"""Command-line front end.

Exit codes: 0 ok, 2 usage or precondition error, 3 construction failure,
4 solver did not converge (the result file is still written).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import geometry
from .analysis import extract_diameter_graph, make_table
from .constructions import (
    ConstructionError,
    DomainError,
    Family,
    build_dn,
    build_from_angles,
    regular_small_ngon,
    reinhardt_polygon,
)
from .angles import is_power_of_two
from .document import DocumentError, PolygonDocument, dumps, read_polygon_file, render_svg, vertices_csv
from .geometry import InvalidPolygonError, NotConvexError, Polygon
from .optimize import Problem, solve

EXIT_OK, EXIT_USAGE, EXIT_CONSTRUCTION, EXIT_SOLVER = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.10f}"


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _construct(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.family == "regular":
        report = regular_small_ngon(args.n)
    elif args.family == "reinhardt":
        if args.m is None:
            raise UsageError("--m is required for the reinhardt family")
        report = reinhardt_polygon(args.m, args.n)
    else:
        if not is_power_of_two(args.n) or args.n < 16:
            raise UsageError(f"dn needs n = 2**s with s >= 4, got {args.n}")
        report = build_dn(args.n)
    doc = PolygonDocument.from_report(report)
    if args.out:
        text = dumps(doc) if args.format == "json" else vertices_csv(doc.vertices)
        _write(args.out, text)
    m = report.metrics
    print(args.family, report.n, _fmt(m.perimeter), _fmt(m.width), _fmt(m.diameter))
    return EXIT_OK


def _optimize(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    try:
        result = solve(Problem(args.problem), args.n, starts=args.starts, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = json.dumps(result.as_dict(), indent=2) + "\n"
    if args.out:
        _write(args.out, payload)
    if args.polygon and result.converged:
        family = Family.DN_STAR if result.problem is Problem.DN_STAR else Family.BN_STAR
        report = build_from_angles(result.alphas, family)
        _write(args.polygon, dumps(PolygonDocument.from_report(report)))
    print(args.problem, result.n, _fmt(result.objective), "converged" if result.converged else "not-converged")
    return EXIT_OK if result.converged else EXIT_SOLVER


def _table(args) -> int:
    table = make_table(args.which)
    sys.stdout.write(table.to_csv() if args.csv else table.to_text())
    return EXIT_OK


def _load_document(path: str) -> PolygonDocument:
    try:
        loaded = read_polygon_file(Path(path))
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    if isinstance(loaded, PolygonDocument):
        return loaded
    poly = Polygon(loaded)
    m = geometry.measure(poly)
    g = extract_diameter_graph(poly)
    return PolygonDocument(
        family="csv",
        n=len(poly),
        vertices=tuple(map(tuple, poly.vertices.tolist())),
        perimeter=m.perimeter,
        width=m.width,
        diameter=m.diameter,
        edges=g.edges,
        cycle_length=g.cycle_length,
        pendant_count=g.pendant_count,
    )


def _render(args) -> int:
    doc = _load_document(args.input)
    _write(args.output, render_svg(doc))
    return EXIT_OK


def _measure(args) -> int:
    doc = _load_document(args.input)
    poly = Polygon(doc.vertices)
    m = geometry.measure(poly)
    g = extract_diameter_graph(poly, tol=args.tol)
    print("n", len(poly))
    print("perimeter", _fmt(m.perimeter))
    print("width", _fmt(m.width) if m.is_convex else "undefined")
    print("diameter", _fmt(m.diameter))
    print("convex", str(m.is_convex).lower())
    print("small", str(m.is_small).lower())
    print("diameter_graph", f"edges={g.edge_count}", f"cycle={g.cycle_length}", f"pendants={g.pendant_count}", g.classification.value)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="smallgon", description="Convex small polygons of large perimeter and width.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a polygon and print 'family n L W diameter'")
    p.add_argument("--family", choices=("regular", "reinhardt", "dn"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, help="odd factor for the reinhardt family")
    p.add_argument("--out", help="write the polygon here")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_construct)

    p = sub.add_parser("optimize", help="maximize the perimeter over a diameter-graph family")
    p.add_argument("--problem", choices=tuple(pr.value for pr in Problem), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--out", help="write the result JSON here")
    p.add_argument("--polygon", help="also write the optimal polygon document here")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--starts", type=int, default=5, help="number of perturbed restarts")
    p.set_defaults(func=_optimize)

    p = sub.add_parser("table", help="regenerate one of the summary tables")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_table)

    p = sub.add_parser("render", help="render a polygon document as SVG")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=_render)

    p = sub.add_parser("measure", help="measure a polygon document or vertex CSV")
    p.add_argument("input")
    p.add_argument("--tol", type=float, default=1e-9, help="unit-distance tolerance")
    p.set_defaults(func=_measure)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, DocumentError, InvalidPolygonError, NotConvexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION


if __name__ == "__main__":
    sys.exit(main())
