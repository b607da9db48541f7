"""Deterministic SVG figures: quadrangle, homothetic parallelograms, rays.

All geometry stays rational until the final coordinate formatting, which
uses fixed 6-decimal notation so that identical scenes always produce
byte-identical documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .geometry import Line, Point, format_scalar, line_through
from .homothety import Ratio, dividing_points, result_vertices
from .quadrangle import Quadrangle, diagonal_intersection

ViewBox = Tuple[Fraction, Fraction, Fraction, Fraction]  # min_x, min_y, max_x, max_y


@dataclass(frozen=True)
class Scene:
    quad: Quadrangle
    ratios: Tuple[Ratio, ...]
    show_construction_lines: bool = False
    show_perspective_rays: bool = False
    show_labels: bool = False

    def __post_init__(self) -> None:
        if not self.ratios:
            raise ValueError("a scene needs at least one ratio")
        seen = []
        for r in self.ratios:
            if r not in seen:
                seen.append(r)
        object.__setattr__(self, "ratios", tuple(seen))


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 640
    margin_fraction: Fraction = Fraction(1, 10)
    quad_color: str = "#374151"
    parallelogram_colors: Tuple[str, ...] = (
        "#d62728",
        "#1f77b4",
        "#2ca02c",
        "#9467bd",
        "#ff7f0e",
    )
    construction_color: str = "#b0b7c3"
    ray_color: str = "#8a8f98"
    point_color: str = "#111111"

    def __post_init__(self) -> None:
        if self.width_px < 64:
            raise ValueError("width_px must be at least 64")
        if not 0 < self.margin_fraction < Fraction(1, 2):
            raise ValueError("margin_fraction must lie in (0, 1/2)")


def _scene_points(scene: Scene) -> List[Point]:
    pts = list(scene.quad.vertices)
    pts.append(diagonal_intersection(scene.quad))
    for r in scene.ratios:
        pts.extend(result_vertices(scene.quad, r))
    return pts


def compute_viewbox(scene: Scene, margin_fraction: Fraction = Fraction(1, 10)) -> ViewBox:
    """Exact bounding rectangle of everything drawn, padded per side."""
    pts = _scene_points(scene)
    min_x = min(p.x for p in pts)
    max_x = max(p.x for p in pts)
    min_y = min(p.y for p in pts)
    max_y = max(p.y for p in pts)
    span_x = max_x - min_x
    span_y = max_y - min_y
    # A valid quadrangle always has positive extent in both axes, but a
    # zero-area viewbox must never escape this function.
    span = max(span_x, span_y, Fraction(1))
    pad_x = margin_fraction * (span_x if span_x > 0 else span)
    pad_y = margin_fraction * (span_y if span_y > 0 else span)
    return (min_x - pad_x, min_y - pad_y, max_x + pad_x, max_y + pad_y)


def _clip_line(line: Line, box: ViewBox) -> Optional[Tuple[Point, Point]]:
    """Exact clip of an infinite line to the viewbox rectangle."""
    x0, y0, x1, y1 = box
    t_lo: Optional[Fraction] = None
    t_hi: Optional[Fraction] = None
    for base, d, lo, hi in (
        (line.base.x, line.dir.dx, x0, x1),
        (line.base.y, line.dir.dy, y0, y1),
    ):
        if d == 0:
            if not lo <= base <= hi:
                return None
            continue
        a, b = (lo - base) / d, (hi - base) / d
        if a > b:
            a, b = b, a
        t_lo = a if t_lo is None else max(t_lo, a)
        t_hi = b if t_hi is None else min(t_hi, b)
    if t_lo is None or t_hi is None or t_lo >= t_hi:
        return None
    return line.at(t_lo), line.at(t_hi)


class _Mapper:
    """World (rational, y-up) to pixel (float text, y-down) conversion."""

    def __init__(self, box: ViewBox, width_px: int):
        self.box = box
        self.scale = Fraction(width_px) / (box[2] - box[0])
        self.width = Fraction(width_px)
        self.height = (box[3] - box[1]) * self.scale

    def to_px(self, p: Point) -> Tuple[Fraction, Fraction]:
        return ((p.x - self.box[0]) * self.scale, (self.box[3] - p.y) * self.scale)

    def fmt_point(self, p: Point) -> str:
        px, py = self.to_px(p)
        return f"{_fmt(px)},{_fmt(py)}"


def _fmt(v) -> str:
    return f"{float(v):.6f}"


def render_svg(scene: Scene, opts: RenderOptions = RenderOptions()) -> str:
    """Standalone SVG 1.1 document; pure function of its inputs."""
    box = compute_viewbox(scene, opts.margin_fraction)
    mapper = _Mapper(box, opts.width_px)
    q = scene.quad
    o = diagonal_intersection(q)
    parts: List[str] = []
    parts.append('<?xml version="1.0" encoding="UTF-8"?>')
    quad_txt = " ".join(
        f"{label}=({format_scalar(p.x)},{format_scalar(p.y)})"
        for label, p in zip("ABCD", q.vertices)
    )
    ratio_txt = ",".join(format_scalar(r) for r in scene.ratios)
    parts.append(f"<!-- quadrangle {quad_txt} lambdas={ratio_txt} -->")
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(mapper.width)}" height="{_fmt(mapper.height)}" '
        f'viewBox="0 0 {_fmt(mapper.width)} {_fmt(mapper.height)}">'
    )
    parts.append(
        f'<rect x="0" y="0" width="{_fmt(mapper.width)}" height="{_fmt(mapper.height)}" fill="#ffffff"/>'
    )

    # Layer 1: the quadrangle itself (self-intersecting path draws fine).
    quad_pts = " ".join(mapper.fmt_point(p) for p in q.vertices)
    parts.append(
        f'<polygon points="{quad_pts}" fill="none" stroke="{opts.quad_color}" stroke-width="2"/>'
    )

    # Layer 2: construction lines, clipped to the viewbox.
    if scene.show_construction_lines:
        for r in scene.ratios:
            if r == 1:
                continue
            dp = dividing_points(q, r)
            for p1, p2 in (
                (dp.a_b, dp.a_d),
                (dp.b_a, dp.b_c),
                (dp.c_b, dp.c_d),
                (dp.d_c, dp.d_a),
            ):
                if p1 == p2:
                    continue
                seg = _clip_line(line_through(p1, p2), box)
                if seg is None:
                    continue
                parts.append(
                    f'<line x1="{_fmt(mapper.to_px(seg[0])[0])}" y1="{_fmt(mapper.to_px(seg[0])[1])}" '
                    f'x2="{_fmt(mapper.to_px(seg[1])[0])}" y2="{_fmt(mapper.to_px(seg[1])[1])}" '
                    f'stroke="{opts.construction_color}" stroke-width="1" stroke-dasharray="5,4"/>'
                )

    # Layer 3: one polygon per ratio (ratio 1 is a point, drawn in layer 5).
    for i, r in enumerate(scene.ratios):
        if r == 1:
            continue
        color = opts.parallelogram_colors[i % len(opts.parallelogram_colors)]
        pts = " ".join(mapper.fmt_point(p) for p in result_vertices(q, r))
        parts.append(
            f'<polygon points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>'
        )

    # Layer 4: perspectivity rays through O and each vertex family.
    if scene.show_perspective_rays:
        for v in _ray_anchors(q, o):
            seg = _clip_line(line_through(o, v), box)
            if seg is None:
                continue
            parts.append(
                f'<line x1="{_fmt(mapper.to_px(seg[0])[0])}" y1="{_fmt(mapper.to_px(seg[0])[1])}" '
                f'x2="{_fmt(mapper.to_px(seg[1])[0])}" y2="{_fmt(mapper.to_px(seg[1])[1])}" '
                f'stroke="{opts.ray_color}" stroke-width="1" stroke-dasharray="2,3"/>'
            )

    # Layer 5: point markers for the vertices and O.
    for p in (*q.vertices, o):
        px, py = mapper.to_px(p)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3" fill="{opts.point_color}"/>'
        )

    # Layer 6: labels, nudged along the outward bisector at each vertex.
    if scene.show_labels:
        diag = math.hypot(float(mapper.width), float(mapper.height))
        off = 0.02 * diag
        verts = q.vertices
        for i, label in enumerate("ABCD"):
            v = verts[i]
            prev_v = verts[(i - 1) % 4]
            next_v = verts[(i + 1) % 4]
            dx, dy = _outward_px(mapper, v, prev_v, next_v)
            px, py = mapper.to_px(v)
            parts.append(_text(label, float(px) + off * dx, float(py) + off * dy))
        px, py = mapper.to_px(o)
        parts.append(_text("O", float(px) + off * 0.7, float(py) + off * 0.7))

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _ray_anchors(q: Quadrangle, o: Point) -> List[Point]:
    """One direction-defining point per vertex family, distinct from O."""
    anchors = []
    for candidate_ratio in (Fraction(0), Fraction(2)):
        anchors = [v for v in result_vertices(q, candidate_ratio) if v != o]
        if len(anchors) == 4:
            break
    return anchors


def _outward_px(mapper: _Mapper, v: Point, prev_v: Point, next_v: Point) -> Tuple[float, float]:
    """Unit offset direction in pixel space, away from the polygon interior."""
    vx, vy = (float(c) for c in mapper.to_px(v))
    px, py = (float(c) for c in mapper.to_px(prev_v))
    nx, ny = (float(c) for c in mapper.to_px(next_v))
    ux, uy = px - vx, py - vy
    wx, wy = nx - vx, ny - vy
    lu = math.hypot(ux, uy) or 1.0
    lw = math.hypot(wx, wy) or 1.0
    bx, by = ux / lu + wx / lw, uy / lu + wy / lw
    lb = math.hypot(bx, by)
    if lb < 1e-12:
        # Straight angle: step perpendicular to the sides instead.
        bx, by = -uy / lu, ux / lu
        lb = 1.0
    return -bx / lb, -by / lb


def _text(label: str, x: float, y: float) -> str:
    return (
        f'<text x="{x:.6f}" y="{y:.6f}" font-family="serif" font-size="16" '
        f'text-anchor="middle" dominant-baseline="middle">{label}</text>'
    )
