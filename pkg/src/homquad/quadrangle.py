"""The input quadrangle: validation, diagonal intersection, classification.

A quadrangle ABCD is accepted whenever its four vertices are pairwise
distinct and its diagonals AC, BD are not parallel; that is the only
standing assumption the constructions downstream need. A valid
quadrangle is exactly one of convex, re-entrant, or crossed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .geometry import (
    GeometryError,
    Line,
    Point,
    cross,
    dot,
    format_scalar,
    intersect_lines,
    line_through,
    point_in_open_segment,
    scalar,
    shoelace_signed_area,
)


class InvalidQuadrangle(GeometryError):
    """Base for quadrangle validation failures."""


class DuplicateVertex(InvalidQuadrangle):
    pass


class ParallelDiagonals(InvalidQuadrangle):
    pass


class UnclassifiableDegenerate(GeometryError):
    """Non-adjacent sides overlap along a segment; no class applies."""


class QuadClass(enum.Enum):
    CONVEX = "convex"
    RE_ENTRANT = "re-entrant"
    CROSSED = "crossed"


@dataclass(frozen=True)
class Quadrangle:
    """Vertex order defines sides AB, BC, CD, DA and diagonals AC, BD."""

    a: Point
    b: Point
    c: Point
    d: Point

    @property
    def vertices(self) -> Tuple[Point, Point, Point, Point]:
        return (self.a, self.b, self.c, self.d)

    @property
    def sides(self) -> Tuple[Tuple[Point, Point], ...]:
        return ((self.a, self.b), (self.b, self.c), (self.c, self.d), (self.d, self.a))


def validate(a: Point, b: Point, c: Point, d: Point) -> Quadrangle:
    """Build a Quadrangle, enforcing distinct vertices and non-parallel diagonals."""
    labeled = [("A", a), ("B", b), ("C", c), ("D", d)]
    for i in range(4):
        for j in range(i + 1, 4):
            if labeled[i][1] == labeled[j][1]:
                raise DuplicateVertex(
                    f"vertices {labeled[i][0]} and {labeled[j][0]} coincide at {labeled[i][1]}"
                )
    if cross(c - a, d - b) == 0:
        raise ParallelDiagonals("diagonals AC and BD are parallel")
    return Quadrangle(a, b, c, d)


def diagonal_intersection(q: Quadrangle) -> Point:
    """The point O where lines AC and BD meet (not necessarily inside either segment)."""
    return intersect_lines(line_through(q.a, q.c), line_through(q.b, q.d))


def _proper_segment_intersection(p1: Point, p2: Point, p3: Point, p4: Point) -> Optional[Point]:
    """Interior intersection point of open segments p1p2 and p3p4, if any.

    Raises UnclassifiableDegenerate when the segments are collinear and
    overlap along a stretch of positive length.
    """
    d1 = p2 - p1
    d2 = p4 - p3
    if cross(d1, d2) == 0:
        if cross(p3 - p1, d1) != 0:
            return None  # parallel, different carriers
        # Collinear: compare parameter intervals along d1.
        n = d1.norm_sq()
        t3 = dot(p3 - p1, d1) / n
        t4 = dot(p4 - p1, d1) / n
        lo, hi = min(t3, t4), max(t3, t4)
        if min(hi, 1) > max(lo, 0):
            raise UnclassifiableDegenerate("sides overlap along a segment")
        return None
    x = intersect_lines(Line(p1, d1), Line(p3, d2))
    if point_in_open_segment(x, p1, p2) and point_in_open_segment(x, p3, p4):
        return x
    return None


def classify(q: Quadrangle) -> QuadClass:
    """Convex, re-entrant, or crossed.

    Crossed iff a pair of opposite sides share an interior point; else
    convex iff O is interior to both diagonal segments; else re-entrant.
    """
    if (
        _proper_segment_intersection(q.a, q.b, q.c, q.d) is not None
        or _proper_segment_intersection(q.b, q.c, q.d, q.a) is not None
    ):
        return QuadClass.CROSSED
    o = diagonal_intersection(q)
    if point_in_open_segment(o, q.a, q.c) and point_in_open_segment(o, q.b, q.d):
        return QuadClass.CONVEX
    return QuadClass.RE_ENTRANT


def quad_signed_area(q: Quadrangle) -> Fraction:
    """Signed shoelace area of (A, B, C, D).

    For convex and re-entrant quadrangles |value| is the plain area; for
    crossed ones it is the difference of the two lobe-triangle areas.
    """
    return shoelace_signed_area(list(q.vertices))


def quad_to_json(q: Quadrangle) -> dict:
    return {
        label: [format_scalar(p.x), format_scalar(p.y)]
        for label, p in zip("ABCD", q.vertices)
    }


def quad_from_json(doc: dict) -> Quadrangle:
    """Parse the canonical quadrangle document and validate it."""
    points = []
    for label in "ABCD":
        if label not in doc:
            raise InvalidQuadrangle(f"missing vertex {label!r}")
        coords = doc[label]
        if not isinstance(coords, (list, tuple)) or len(coords) != 2:
            raise InvalidQuadrangle(f"vertex {label!r} must be a pair of scalars")
        try:
            points.append(Point(scalar(coords[0]), scalar(coords[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidQuadrangle(f"vertex {label!r}: {exc}") from exc
    return validate(*points)
