"""Lattice paths, EPG representations, verification, compaction and rendering."""

from __future__ import annotations

import colorsys
import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property


class PathError(ValueError):
    pass


@dataclass(frozen=True)
class GridPath:
    """A vertex-simple rectilinear path stored by its corner points.

    Construct through ``canonicalize_path``; the raw constructor trusts its input.
    """

    corners: tuple

    @cached_property
    def segments(self) -> tuple:
        return tuple(zip(self.corners, self.corners[1:]))

    @cached_property
    def bend_points(self) -> tuple:
        return self.corners[1:-1]

    @cached_property
    def edge_set(self) -> frozenset:
        # unit edge (x, y, 0) joins (x, y)-(x+1, y); (x, y, 1) joins (x, y)-(x, y+1)
        out = set()
        for (x0, y0), (x1, y1) in self.segments:
            if y0 == y1:
                for x in range(min(x0, x1), max(x0, x1)):
                    out.add((x, y0, 0))
            else:
                for y in range(min(y0, y1), max(y0, y1)):
                    out.add((x0, y, 1))
        return frozenset(out)

    def length(self) -> int:
        return sum(abs(a[0] - b[0]) + abs(a[1] - b[1]) for a, b in self.segments)

    def reversed(self) -> "GridPath":
        return GridPath(self.corners[::-1])

    def translated(self, dx: int, dy: int) -> "GridPath":
        return GridPath(tuple((x + dx, y + dy) for x, y in self.corners))

    def to_json(self) -> list:
        return [[x, y] for x, y in self.corners]


def canonicalize_path(points) -> GridPath:
    pts = [(int(p[0]), int(p[1])) for p in points]
    if not pts:
        raise PathError("empty point sequence")
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 == x1 and y0 == y1:
            raise PathError(f"zero-length step at {(x0, y0)}")
        if x0 != x1 and y0 != y1:
            raise PathError(f"diagonal step {(x0, y0)} -> {(x1, y1)}")
    if len(pts) < 2:
        raise PathError("a path needs at least one unit edge")
    corners = [pts[0]]
    for p in pts[1:]:
        if len(corners) >= 2 and _same_direction(corners[-2], corners[-1], p):
            corners[-1] = p
        else:
            corners.append(p)
    segs = list(zip(corners, corners[1:]))
    for i, a in enumerate(segs):
        for j in range(i + 1, len(segs)):
            hit = _common_point(a, segs[j], j == i + 1)
            if hit is not None:
                raise PathError(f"repeated grid point {hit}")
    return GridPath(tuple(corners))


def _common_point(a, b, adjacent: bool):
    """A grid point on both segments; for consecutive ones the shared corner is ignored."""
    (ax0, ay0), (ax1, ay1) = a
    (bx0, by0), (bx1, by1) = b
    lo_x, hi_x = max(min(ax0, ax1), min(bx0, bx1)), min(max(ax0, ax1), max(bx0, bx1))
    lo_y, hi_y = max(min(ay0, ay1), min(by0, by1)), min(max(ay0, ay1), max(by0, by1))
    if lo_x > hi_x or lo_y > hi_y:
        return None
    if not adjacent:
        return (lo_x, lo_y)
    if (lo_x, lo_y) != (hi_x, hi_y):
        # overlap longer than the corner: the path turns back on itself
        return (lo_x, lo_y) if (lo_x, lo_y) != (bx0, by0) else (hi_x, hi_y)
    return None


def _same_direction(a, b, c) -> bool:
    if a[0] == b[0] == c[0]:
        return (b[1] - a[1] > 0) == (c[1] - b[1] > 0)
    if a[1] == b[1] == c[1]:
        return (b[0] - a[0] > 0) == (c[0] - b[0] > 0)
    return False


def count_bends(p: GridPath) -> int:
    return len(p.corners) - 2


def is_monotonic(p: GridPath) -> bool:
    def ascending(cs):
        return all(b[0] >= a[0] and b[1] >= a[1] for a, b in zip(cs, cs[1:]))

    return ascending(p.corners) or ascending(p.corners[::-1])


def intersects(p: GridPath, q: GridPath) -> bool:
    a, b = p.edge_set, q.edge_set
    if len(a) > len(b):
        a, b = b, a
    return any(e in b for e in a)


# ---------------------------------------------------------------- representations


@dataclass(frozen=True)
class EpgRepresentation:
    paths: dict

    @property
    def extent(self) -> tuple:
        xs = [x for p in self.paths.values() for x, _ in p.corners]
        ys = [y for p in self.paths.values() for _, y in p.corners]
        return (max(xs, default=0), max(ys, default=0))

    def to_json(self) -> dict:
        mx, my = self.extent
        return {
            "grid": {"cols": mx + 1, "rows": my + 1},
            "paths": {str(v): self.paths[v].to_json() for v in sorted(self.paths)},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":")) + "\n"

    def bend_counts(self) -> dict:
        return {v: count_bends(p) for v, p in self.paths.items()}


def representation_from_points(points_by_vertex: dict) -> EpgRepresentation:
    return EpgRepresentation({v: canonicalize_path(pts) for v, pts in points_by_vertex.items()})


def loads_representation(text: str) -> EpgRepresentation:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "paths" not in doc:
        raise PathError("representation document needs a 'paths' object")
    paths = {}
    for key, pts in doc["paths"].items():
        paths[int(key)] = canonicalize_path(pts)
    rep = EpgRepresentation(paths)
    grid = doc.get("grid")
    if grid is not None:
        mx, my = rep.extent
        if paths and (mx >= grid.get("cols", mx + 1) or my >= grid.get("rows", my + 1)):
            raise PathError("path coordinates exceed the declared grid")
    return rep


@dataclass
class VerificationReport:
    passed: bool
    max_bends_seen: int
    monotonic_all: bool
    missing_vertices: list = field(default_factory=list)
    extra_intersections: list = field(default_factory=list)
    missing_intersections: list = field(default_factory=list)
    over_bend_vertices: list = field(default_factory=list)
    non_monotonic_vertices: list = field(default_factory=list)
    unknown_vertices: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "maxBendsSeen": self.max_bends_seen,
            "monotonicAll": self.monotonic_all,
            "missingVertices": self.missing_vertices,
            "extraIntersections": [list(e) for e in self.extra_intersections],
            "missingIntersections": [list(e) for e in self.missing_intersections],
            "overBendVertices": self.over_bend_vertices,
            "nonMonotonicVertices": self.non_monotonic_vertices,
            "unknownVertices": self.unknown_vertices,
        }


def intersecting_pairs(rep: EpgRepresentation, limit: int | None = None) -> set:
    """All vertex pairs whose paths share a unit edge.

    Works on whole segments: per grid line, a sweep over the segment intervals
    reports every pair with an overlap of positive length.
    """
    lines = defaultdict(list)
    for v, p in rep.paths.items():
        for (x0, y0), (x1, y1) in p.segments:
            if y0 == y1:
                lines[(0, y0)].append((min(x0, x1), max(x0, x1), v))
            else:
                lines[(1, x0)].append((min(y0, y1), max(y0, y1), v))
    pairs = set()
    for items in lines.values():
        if len(items) < 2:
            continue
        items.sort()
        active = []
        for lo, hi, v in items:
            active = [a for a in active if a[0] > lo]
            for ahi, u in active:
                if u != v:
                    pairs.add((u, v) if u < v else (v, u))
            if limit is not None and len(pairs) > limit:
                return pairs
            active.append((hi, v))
    return pairs


def verify(g, rep: EpgRepresentation, max_bends: int | None = None, require_monotonic: bool = False) -> VerificationReport:
    paths = rep.paths
    missing_vertices = [v for v in g.vertices() if v not in paths]
    unknown = sorted(v for v in paths if not (isinstance(v, int) and 1 <= v <= g.n))
    bends = {v: count_bends(p) for v, p in paths.items()}
    max_seen = max(bends.values(), default=0)
    mono = {v: is_monotonic(p) for v, p in paths.items()}
    over = sorted(v for v, b in bends.items() if max_bends is not None and b > max_bends)
    non_mono = sorted(v for v, ok in mono.items() if not ok)
    # an invalid drawing can have quadratically many overlaps; cap the sweep
    pairs = intersecting_pairs(rep, limit=4 * g.m + 1000)
    extra = sorted(e for e in pairs if e not in g.edges)
    missing = sorted(e for e in g.edges if e not in pairs and e[0] in paths and e[1] in paths)
    passed = not (missing_vertices or unknown or extra or missing or over)
    if require_monotonic and non_mono:
        passed = False
    return VerificationReport(
        passed=passed,
        max_bends_seen=max_seen,
        monotonic_all=not non_mono,
        missing_vertices=missing_vertices,
        extra_intersections=extra,
        missing_intersections=missing,
        over_bend_vertices=over,
        non_monotonic_vertices=non_mono,
        unknown_vertices=unknown,
    )


def compact(rep: EpgRepresentation) -> EpgRepresentation:
    """Drop grid lines that carry no corner; order of the remaining lines is kept."""
    xs = sorted({x for p in rep.paths.values() for x, _ in p.corners})
    ys = sorted({y for p in rep.paths.values() for _, y in p.corners})
    rx = {x: i for i, x in enumerate(xs)}
    ry = {y: i for i, y in enumerate(ys)}
    return EpgRepresentation(
        {v: GridPath(tuple((rx[x], ry[y]) for x, y in p.corners)) for v, p in rep.paths.items()}
    )


def translate(rep: EpgRepresentation, dx: int, dy: int) -> EpgRepresentation:
    return EpgRepresentation({v: p.translated(dx, dy) for v, p in rep.paths.items()})


# ---------------------------------------------------------------- rendering

CELL = 40
MARGIN = 30
OFFSET_FRACTION = 0.12
_SLOTS = (0, 1, -1, 2, -2)
_GLYPHS = "123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def vertex_color(v: int) -> str:
    hue = (v * 0.618033988749895) % 1.0
    r, g, b = colorsys.hls_to_rgb(hue, 0.42, 0.75)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def vertex_offset(v: int) -> float:
    return _SLOTS[(v - 1) % len(_SLOTS)] * OFFSET_FRACTION


def render(rep: EpgRepresentation, fmt: str = "svg") -> str:
    if fmt == "svg":
        return _render_svg(rep)
    if fmt == "ascii":
        return _render_ascii(rep)
    raise ValueError(f"unsupported render format {fmt!r}")


def _render_svg(rep: EpgRepresentation) -> str:
    mx, my = rep.extent
    width = 2 * MARGIN + mx * CELL
    height = 2 * MARGIN + my * CELL

    def sx(x):
        return MARGIN + x * CELL

    def sy(y):
        return height - MARGIN - y * CELL

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for x in range(mx + 1):
        out.append(f'<line x1="{sx(x)}" y1="{sy(0)}" x2="{sx(x)}" y2="{sy(my)}"/>')
    for y in range(my + 1):
        out.append(f'<line x1="{sx(0)}" y1="{sy(y)}" x2="{sx(mx)}" y2="{sy(y)}"/>')
    out.append("</g>")
    out.append(f'<rect x="{sx(0)}" y="{sy(my)}" width="{mx * CELL}" height="{my * CELL}" '
               'fill="none" stroke="#999999" stroke-width="1"/>')
    for v in sorted(rep.paths):
        off = vertex_offset(v) * CELL
        pts = " ".join(f"{sx(x) + off:.2f},{sy(y) - off:.2f}" for x, y in rep.paths[v].corners)
        x0, y0 = rep.paths[v].corners[0]
        out.append(f'<polyline points="{pts}" fill="none" stroke="{vertex_color(v)}" '
                   f'stroke-width="3" stroke-linecap="round"><title>{v}</title></polyline>')
        out.append(f'<text x="{sx(x0) + off - 4:.2f}" y="{sy(y0) - off - 6:.2f}" font-size="11" '
                   f'fill="{vertex_color(v)}">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _render_ascii(rep: EpgRepresentation) -> str:
    mx, my = rep.extent
    w, h = 2 * mx + 1, 2 * my + 1
    owners = defaultdict(set)
    for v, p in rep.paths.items():
        for (x0, y0), (x1, y1) in p.segments:
            dx = (x1 > x0) - (x1 < x0)
            dy = (y1 > y0) - (y1 < y0)
            x, y = x0, y0
            owners[(2 * x, 2 * y)].add(v)
            while (x, y) != (x1, y1):
                owners[(2 * x + dx, 2 * y + dy)].add(v)
                x, y = x + dx, y + dy
                owners[(2 * x, 2 * y)].add(v)
    glyph = {v: _GLYPHS[i % len(_GLYPHS)] for i, v in enumerate(sorted(rep.paths))}
    rows = []
    for cy in range(h - 1, -1, -1):
        line = []
        for cx in range(w):
            who = owners.get((cx, cy))
            on_edge = (cx % 2) != (cy % 2)
            if not who:
                line.append("." if cx % 2 == 0 and cy % 2 == 0 else " ")
            elif len(who) == 1:
                line.append(glyph[next(iter(who))])
            else:
                line.append("*" if on_edge else "+")
        rows.append("".join(line).rstrip())
    legend = [f"{glyph[v]} = {v}" for v in sorted(rep.paths)]
    return "\n".join(rows + [""] + legend) + "\n"
