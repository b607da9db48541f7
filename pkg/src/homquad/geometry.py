"""Exact 2D geometry kernel over arbitrary-precision rationals.

Every value is a ``fractions.Fraction`` (kept in canonical form by the
stdlib), so all predicates here are exact: a cross product is zero iff
the vectors really are parallel, never "close to" parallel. Floating
point is deliberately absent from this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]


class GeometryError(ValueError):
    """Base for all exact-kernel errors."""


class CoincidentPoints(GeometryError):
    """Two points expected to be distinct coincide."""


class ParallelLines(GeometryError):
    """Line intersection requested for parallel (or coincident) lines."""


class DegenerateSegment(GeometryError):
    """Segment endpoints coincide."""


class TooFewPoints(GeometryError):
    """Polygon operations need at least three points."""


def scalar(value: ScalarLike) -> Fraction:
    """Parse a rational from ``p/q`` or ``p`` text, or coerce a number.

    Accepts both the ASCII hyphen-minus and U+2212 as the sign.
    """
    if isinstance(value, str):
        value = value.replace("−", "-").strip()
    return Fraction(value)


def format_scalar(value: Fraction) -> str:
    """Canonical text form: ``p/q``, or just ``p`` when the value is integral."""
    return str(value)


@dataclass(frozen=True)
class Vec:
    """Exact 2D displacement."""

    dx: Fraction
    dy: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "dx", scalar(self.dx))
        object.__setattr__(self, "dy", scalar(self.dy))

    def __add__(self, other: "Vec") -> "Vec":
        return Vec(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "Vec") -> "Vec":
        return Vec(self.dx - other.dx, self.dy - other.dy)

    def __neg__(self) -> "Vec":
        return Vec(-self.dx, -self.dy)

    def __rmul__(self, k: ScalarLike) -> "Vec":
        k = scalar(k)
        return Vec(k * self.dx, k * self.dy)

    def norm_sq(self) -> Fraction:
        return self.dx * self.dx + self.dy * self.dy

    def is_zero(self) -> bool:
        return self.dx == 0 and self.dy == 0


@dataclass(frozen=True)
class Point:
    """Exact 2D position."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", scalar(self.x))
        object.__setattr__(self, "y", scalar(self.y))

    def __sub__(self, other: "Point") -> Vec:
        return Vec(self.x - other.x, self.y - other.y)

    def __add__(self, v: Vec) -> "Point":
        return Point(self.x + v.dx, self.y + v.dy)


@dataclass(frozen=True)
class Line:
    """Line through ``base`` with direction ``dir``; ``dir`` must be nonzero."""

    base: Point
    dir: Vec

    def __post_init__(self) -> None:
        if self.dir.is_zero():
            raise DegenerateSegment("line direction must be nonzero")

    def at(self, t: ScalarLike) -> Point:
        return self.base + scalar(t) * self.dir

    def contains(self, p: Point) -> bool:
        return cross(p - self.base, self.dir) == 0


def cross(u: Vec, v: Vec) -> Fraction:
    """2D cross product; zero iff the vectors are parallel (or one is zero)."""
    return u.dx * v.dy - u.dy * v.dx


def dot(u: Vec, v: Vec) -> Fraction:
    return u.dx * v.dx + u.dy * v.dy


def line_through(p: Point, q: Point) -> Line:
    """Line from ``p`` toward ``q``; the two points must be distinct."""
    if p == q:
        raise CoincidentPoints(f"cannot draw a line through coincident points {p}")
    return Line(p, q - p)


def intersect_lines(l1: Line, l2: Line) -> Point:
    """Unique intersection point of two non-parallel lines, solved exactly.

    Raises ParallelLines for parallel input, coincident lines included.
    """
    denom = cross(l1.dir, l2.dir)
    if denom == 0:
        raise ParallelLines("lines are parallel or coincident")
    t = cross(l2.base - l1.base, l2.dir) / denom
    return l1.at(t)


def collinear(p: Point, q: Point, r: Point) -> bool:
    """True iff the three points lie on one line; coincident pairs count."""
    return cross(q - p, r - p) == 0


def point_in_open_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff ``p`` lies strictly between ``a`` and ``b`` on segment ab."""
    if a == b:
        raise DegenerateSegment("segment endpoints coincide")
    ab = b - a
    if cross(p - a, ab) != 0:
        return False
    t = dot(p - a, ab) / ab.norm_sq()
    return 0 < t < 1


def shoelace_signed_area(points: Sequence[Point]) -> Fraction:
    """Signed shoelace area of a closed polygonal chain.

    Positive for counter-clockwise orientation. For a crossed (bow-tie)
    quadrangle the magnitude is the difference of the two lobe areas.
    """
    if len(points) < 3:
        raise TooFewPoints(f"need at least 3 points, got {len(points)}")
    total = Fraction(0)
    for i, p in enumerate(points):
        q = points[(i + 1) % len(points)]
        total += p.x * q.y - q.x * p.y
    return total / 2
