"""Deterministic 2D primitives for ruler-and-compass constructions.

Points, lines, circles, their intersections, unsigned angles, segment
division and rotation.  All lengths are expressed in units of the governing
circle's radius, which keeps every construction at unit scale where double
precision carries ~1e-13 of noise at worst.  Every operation is a pure
function of its arguments and returns bit-identical results on repeated
calls, so intersection lists can be indexed deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Geometric coincidence threshold: below this, coordinates/lengths are
# treated as equal.  Test threshold is for assertions on derived quantities.
EPS_GEOM = 1e-9
EPS_TEST = 1e-7


class GeometryError(Exception):
    """Base class for geometric failure modes."""


class CoincidentCurves(GeometryError):
    """Two curves are the same object: infinitely many intersections."""


class DegenerateAngle(GeometryError):
    """Angle requested with a leg endpoint falling on the vertex."""


class BadIndex(GeometryError):
    """Segment division index outside [0, n] (or n < 1)."""


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Thresholds for coincidence (eps_geom) and assertions (eps_test)."""

    eps_geom: float = EPS_GEOM
    eps_test: float = EPS_TEST

    def __post_init__(self) -> None:
        if not (0.0 < self.eps_geom < self.eps_test < 1.0):
            raise ValueError(
                f"tolerances must satisfy 0 < eps_geom < eps_test < 1, "
                f"got eps_geom={self.eps_geom}, eps_test={self.eps_test}"
            )


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True, slots=True)
class Line:
    """Infinite line through two distinct anchor points."""

    p: Point
    q: Point

    def __post_init__(self) -> None:
        if distance(self.p, self.q) <= EPS_GEOM:
            raise ValueError(f"line anchors coincide: {self.p} and {self.q}")


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.radius) or self.radius <= EPS_GEOM:
            raise ValueError(f"circle radius must be positive, got {self.radius}")


Curve = Line | Circle


def distance(p: Point, q: Point) -> float:
    """Euclidean distance between two points."""
    return math.hypot(q.x - p.x, q.y - p.y)


def angle(vertex: Point, p: Point, q: Point, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Unsigned angle between rays vertex->p and vertex->q, in [0, pi].

    Computed as atan2(|cross|, dot) of the two leg vectors.  This stays fully
    conditioned near 0 and pi, where acos of a normalized dot product loses
    half the significand.  Symmetric in p and q.
    """
    ux, uy = p.x - vertex.x, p.y - vertex.y
    wx, wy = q.x - vertex.x, q.y - vertex.y
    if math.hypot(ux, uy) <= tol.eps_geom or math.hypot(wx, wy) <= tol.eps_geom:
        raise DegenerateAngle(f"angle leg collapses onto vertex {vertex}")
    cross = ux * wy - uy * wx
    dot = ux * wx + uy * wy
    return math.atan2(abs(cross), dot)


def divide_segment(
    p: Point, q: Point, n: int, k: int, tol: Tolerance = DEFAULT_TOLERANCE
) -> Point:
    """Point at parameter k/n along the segment from p to q.

    k = 0 returns exactly p and k = n exactly q (the two-product form of the
    interpolation guarantees this in floating point).
    """
    if distance(p, q) <= tol.eps_geom:
        raise ValueError(f"cannot divide a degenerate segment at {p}")
    if n < 1:
        raise BadIndex(f"segment must be divided into at least 1 part, got n={n}")
    if not 0 <= k <= n:
        raise BadIndex(f"division index k={k} outside [0, {n}]")
    t = k / n
    s = 1.0 - t
    return Point(p.x * s + q.x * t, p.y * s + q.y * t)


def rotate(p: Point, center: Point, theta: float) -> Point:
    """Rotate p about center by theta radians (counterclockwise positive)."""
    if not math.isfinite(theta):
        raise ValueError(f"rotation angle must be finite, got {theta}")
    c, s = math.cos(theta), math.sin(theta)
    dx, dy = p.x - center.x, p.y - center.y
    return Point(center.x + dx * c - dy * s, center.y + dx * s + dy * c)


def intersect(a: Curve, b: Curve, tol: Tolerance = DEFAULT_TOLERANCE) -> list[Point]:
    """Intersection points of two curves, sorted ascending by (x, y).

    Returns 0, 1 or 2 points.  Tangency is snapped: a discriminant within
    eps_geom of zero counts as exactly zero and yields a single point.
    Coordinates are compared at eps_geom when ordering the result.

    The two arguments are put into a canonical order internally, so
    intersect(a, b) and intersect(b, a) run the same arithmetic and return
    bit-identical lists.

    Raises CoincidentCurves when a and b are the same line or same circle.
    """
    if isinstance(a, Line) and isinstance(b, Line):
        first, second = _canonical_pair(a, b, _line_key)
        return _line_line(first, second, tol)
    if isinstance(a, Circle) and isinstance(b, Circle):
        first, second = _canonical_pair(a, b, _circle_key)
        return _circle_circle(first, second, tol)
    line, circle = (a, b) if isinstance(a, Line) else (b, a)
    coeffs = _implicit(line)
    return _implicit_line_circle(coeffs, circle, tol)


def _line_key(line: Line) -> tuple[float, float, float, float]:
    return (line.p.x, line.p.y, line.q.x, line.q.y)


def _circle_key(circle: Circle) -> tuple[float, float, float]:
    return (circle.center.x, circle.center.y, circle.radius)


def _canonical_pair(a, b, key):
    return (a, b) if key(a) <= key(b) else (b, a)


def _implicit(line: Line) -> tuple[float, float, float]:
    """Coefficients (A, B, C) with Ax + By + C = 0 through the anchors."""
    a = line.q.y - line.p.y
    b = line.p.x - line.q.x
    c = -(a * line.p.x + b * line.p.y)
    return a, b, c


def _point_line_distance(coeffs: tuple[float, float, float], p: Point) -> float:
    a, b, c = coeffs
    return abs(a * p.x + b * p.y + c) / math.hypot(a, b)


def _line_line(l1: Line, l2: Line, tol: Tolerance) -> list[Point]:
    a1, b1, c1 = _implicit(l1)
    a2, b2, c2 = _implicit(l2)
    det = a1 * b2 - a2 * b1
    # Parallelism judged on unit directions so long anchors don't skew it.
    if abs(det) / (math.hypot(a1, b1) * math.hypot(a2, b2)) <= tol.eps_geom:
        if _point_line_distance((a1, b1, c1), l2.p) <= tol.eps_geom:
            raise CoincidentCurves(f"lines {l1} and {l2} coincide")
        return []
    x = (b1 * c2 - b2 * c1) / det
    y = (c1 * a2 - c2 * a1) / det
    return [Point(x, y)]


def _implicit_line_circle(
    coeffs: tuple[float, float, float], circle: Circle, tol: Tolerance
) -> list[Point]:
    a, b, c = coeffs
    cx, cy = circle.center.x, circle.center.y
    n2 = a * a + b * b
    # Signed offset of the center from the line, scaled by the normal.
    f = (a * cx + b * cy + c) / n2
    foot = Point(cx - a * f, cy - b * f)
    disc = circle.radius * circle.radius - f * f * n2
    if abs(disc) < tol.eps_geom:
        return [foot]
    if disc < 0.0:
        return []
    s = math.sqrt(disc / n2)
    p1 = Point(foot.x - b * s, foot.y + a * s)
    p2 = Point(foot.x + b * s, foot.y - a * s)
    return _ordered(p1, p2, tol)


def _circle_circle(c1: Circle, c2: Circle, tol: Tolerance) -> list[Point]:
    d = distance(c1.center, c2.center)
    if d <= tol.eps_geom:
        if abs(c1.radius - c2.radius) <= tol.eps_geom:
            raise CoincidentCurves(f"circles {c1} and {c2} coincide")
        return []  # concentric, distinct radii
    # Radical line of the two circles, then one well-tested quadratic path.
    a = 2.0 * (c2.center.x - c1.center.x)
    b = 2.0 * (c2.center.y - c1.center.y)
    c = (
        (c1.center.x ** 2 + c1.center.y ** 2 - c1.radius ** 2)
        - (c2.center.x ** 2 + c2.center.y ** 2 - c2.radius ** 2)
    )
    return _implicit_line_circle((a, b, c), c1, tol)


def _ordered(p1: Point, p2: Point, tol: Tolerance) -> list[Point]:
    """Sort two points ascending by (x, y), comparing coordinates at eps_geom."""
    if abs(p1.x - p2.x) > tol.eps_geom:
        return [p1, p2] if p1.x < p2.x else [p2, p1]
    if abs(p1.y - p2.y) > tol.eps_geom:
        return [p1, p2] if p1.y < p2.y else [p2, p1]
    return [p1, p2]
