"""Approximate circle division: the Bion and Tempier constructions.

Both recipes start from the same base point V, the lower intersection of two
arcs drawn around the ends of a horizontal diameter with the diameter as
radius (the vesica piscis apex, at distance sqrt(3) below the center).  A ray
from V through a division point of the diameter cuts the circle at a point G,
and the central angle it spans approximates 2*pi/n:

* Bion: aim through the second of n equal diameter divisions (from the left
  endpoint B) and measure the angle from B.
* Tempier: aim through the point two n-th parts of the diameter left of the
  center and measure the angle from the top of the vertical diameter.

This module carries both the closed-form angles (planar trigonometry on the
triangle V / center / division point) and generators that emit the same
constructions as DSL programs, so the geometric kernel and the formulas can
be verified against each other.  It also quantifies how good V is at
rectifying a quadrant, which is what makes the recipes work at all.

Every length is in units of the circle radius; the angles do not depend on
that choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geometry import EPS_GEOM, EPS_TEST, Point, rotate
from .dsl import (
    CircleDef,
    Divide,
    Intersect,
    LineDef,
    MeasureAngle,
    Num,
    PointDef,
    Program,
    Selector,
)

__all__ = [
    "SQRT3",
    "Method",
    "UnsupportedN",
    "DomainError",
    "AngleConfig",
    "ErrorRow",
    "RectificationResult",
    "PolygonResult",
    "angle_x",
    "angle_y",
    "bion_config",
    "tempier_config",
    "bion_angle",
    "tempier_angle",
    "method_angle",
    "bion_program",
    "tempier_program",
    "method_program",
    "polygon",
    "error_table",
    "relative_error_limit",
    "best_method",
    "rectified_quadrant",
    "exact_rectifier_distance",
]

SQRT3 = math.sqrt(3.0)
TAU = 2.0 * math.pi

# Two methods tie when their absolute relative errors agree this closely.
TIE_TOLERANCE = 1e-4


class Method(Enum):
    BION = "bion"
    TEMPIER = "tempier"


class UnsupportedN(ValueError):
    """n below 4: the aiming point would sit right of the center and the
    obtuse-angle derivation behind the closed forms no longer applies."""


class DomainError(ValueError):
    """An inverse-trig argument left [-1, 1] by more than the geometric
    coincidence threshold."""


def _require_n(n: int) -> None:
    if n < 4:
        raise UnsupportedN(f"circle division is supported for n >= 4, got n={n}")


@dataclass(frozen=True, slots=True)
class AngleConfig:
    """Right-triangle data the angle formulas consume.

    a: distance from the center to the aiming point on the diameter,
    b: distance from the center down to the base point V,
    c: distance from V to the aiming point (hypotenuse),
    d: circle radius (1 in practice).
    """

    a: float
    b: float
    c: float
    d: float = 1.0

    def __post_init__(self) -> None:
        if self.a < 0 or self.b <= 0 or self.c <= 0 or self.d <= 0:
            raise ValueError(f"invalid side lengths a={self.a} b={self.b} c={self.c} d={self.d}")
        gap = self.c * self.c - (self.a * self.a + self.b * self.b)
        if abs(gap) > EPS_TEST * max(1.0, self.c * self.c):
            raise ValueError(
                f"sides violate c^2 = a^2 + b^2: c^2 - (a^2+b^2) = {gap}"
            )


def _arc_arg(value: float, what: str) -> float:
    """Clamp an inverse-trig argument to [-1, 1]; beyond eps it is an error."""
    if abs(value) > 1.0 + EPS_GEOM:
        raise DomainError(f"{what} = {value} outside [-1, 1]")
    return max(-1.0, min(1.0, value))


def angle_x(cfg: AngleConfig) -> float:
    """Angle at the center, measured from the left diameter endpoint.

    x = arcsin(b/c) - arcsin(a*b/(c*d)), in (0, pi/2].
    """
    s1 = _arc_arg(cfg.b / cfg.c, "b/c")
    s2 = _arc_arg(cfg.a * cfg.b / (cfg.c * cfg.d), "a*b/(c*d)")
    return math.asin(s1) - math.asin(s2)


def angle_y(cfg: AngleConfig) -> float:
    """Angle at the center, measured from the top of the vertical diameter.

    y = arccos(-a/c) - arccos(a*b/(c*d)), in (0, pi/2]; complements angle_x
    to pi/2 on the same configuration.
    """
    c1 = _arc_arg(-cfg.a / cfg.c, "-a/c")
    c2 = _arc_arg(cfg.a * cfg.b / (cfg.c * cfg.d), "a*b/(c*d)")
    return math.acos(c1) - math.acos(c2)


def bion_config(n: int) -> AngleConfig:
    """Sides of the aiming triangle for the Bion n-gon: a = (n-4)/n."""
    _require_n(n)
    a = (n - 4) / n
    return AngleConfig(a=a, b=SQRT3, c=math.hypot(a, SQRT3))


def tempier_config(n: int, base_distance: float = SQRT3) -> AngleConfig:
    """Sides of the aiming triangle for the Tempier n-gon: a = 4/n.

    base_distance generalizes how far below the center the base point sits.
    """
    _require_n(n)
    if not (base_distance > 0.0 and math.isfinite(base_distance)):
        raise ValueError(f"base distance must be positive, got {base_distance}")
    a = 4.0 / n
    return AngleConfig(a=a, b=base_distance, c=math.hypot(a, base_distance))


def bion_angle(n: int) -> float:
    """Closed-form Bion central angle:

    x(n) = arcsin(sqrt(3) n / (2 sqrt(n^2 - 2n + 4)))
         - arcsin(sqrt(3) (n-4) / (2 sqrt(n^2 - 2n + 4)))

    Exact (equal to 2*pi/n) only for n = 4 and n = 6.
    """
    _require_n(n)
    root = 2.0 * math.sqrt(n * n - 2.0 * n + 4.0)
    return math.asin(_arc_arg(SQRT3 * n / root, "b/c")) - math.asin(
        _arc_arg(SQRT3 * (n - 4) / root, "a*b/(c*d)")
    )


def tempier_angle(n: int, base_distance: float = SQRT3) -> float:
    """Closed-form Tempier central angle; exact only for n = 4 and n = 12.

    With the default base this is
    y(n) = arccos(-4 / sqrt(3 n^2 + 16)) - arccos(4 sqrt(3) / sqrt(3 n^2 + 16));
    a different base_distance substitutes for sqrt(3) throughout.
    """
    return angle_y(tempier_config(n, base_distance))


def method_angle(method: Method, n: int) -> float:
    """The chosen method's approximation to the central angle 2*pi/n."""
    return bion_angle(n) if method is Method.BION else tempier_angle(n)


# --- construction programs ----------------------------------------------------

def _base_statements() -> list:
    # Canonical frame: unit circle about C, diameter B(-1,0) -- A(1,0),
    # vesica arcs about both endpoints with radius |BA|, V picked below.
    return [
        PointDef("C", Num(0.0), Num(0.0)),
        PointDef("B", Num(-1.0), Num(0.0)),
        PointDef("A", Num(1.0), Num(0.0)),
        CircleDef("main", "C", "B"),
        CircleDef("arcB", "B", "A"),
        CircleDef("arcA", "A", "B"),
        Intersect(("V",), "arcB", "arcA", Selector("lower")),
    ]


def bion_program(n: int) -> Program:
    """DSL program constructing the Bion angle for the n-gon.

    Evaluating it yields scalar ``theta`` equal to ``bion_angle(n)``: the ray
    from V through the second diameter division point F (of n, from the left)
    meets the circle at G, and theta measures G from endpoint B.
    """
    _require_n(n)
    statements = _base_statements() + [
        Divide("F", "B", "A", n, 2),
        LineDef("ray", "V", "F"),
        Intersect(("G",), "ray", "main", Selector("upper")),
        MeasureAngle("theta", "C", "B", "G"),
    ]
    return Program(tuple(statements))


def tempier_program(n: int) -> Program:
    """DSL program constructing the Tempier angle for the n-gon.

    The aiming point T sits two n-th parts of the diameter left of center
    (reached as division n-4 of 2n equal parts from B), and ``theta``
    measures the circle hit G from the top point D of the vertical diameter.
    """
    _require_n(n)
    statements = _base_statements() + [
        PointDef("D", Num(0.0), Num(1.0)),
        Divide("T", "B", "A", 2 * n, n - 4),
        LineDef("ray", "V", "T"),
        Intersect(("G",), "ray", "main", Selector("upper")),
        MeasureAngle("theta", "C", "D", "G"),
    ]
    return Program(tuple(statements))


def method_program(method: Method, n: int) -> Program:
    return bion_program(n) if method is Method.BION else tempier_program(n)


# --- tables and analysis -------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ErrorRow:
    """One row of a method error table, all angles in radians."""

    n: int
    exact: float      # 2*pi/n
    approx: float     # the method's angle
    error: float      # exact - approx
    rel_error: float  # |exact - approx| / exact


@dataclass(frozen=True, slots=True)
class PolygonResult:
    """n-gon laid out by stepping the approximate angle around the circle."""

    vertices: tuple[Point, ...]
    step_angle: float
    closure_gap: float  # n * step_angle - 2*pi, signed


@dataclass(frozen=True, slots=True)
class RectificationResult:
    """Implied value of pi when a base point rectifies the quadrant."""

    base_distance: float
    implied_pi: float


def polygon(method: Method, n: int) -> PolygonResult:
    """Vertices rotate(B, C, k*theta) for k = 0..n-1 on the unit circle.

    The closure gap n*theta - 2*pi is the angular misfit left after stepping
    the approximate side n times; it vanishes exactly when the method does.
    """
    theta = method_angle(method, n)
    center = Point(0.0, 0.0)
    start = Point(-1.0, 0.0)
    vertices = tuple(rotate(start, center, k * theta) for k in range(n))
    return PolygonResult(vertices, theta, n * theta - TAU)


def error_table(method: Method, n_from: int, n_to: int) -> list[ErrorRow]:
    """ErrorRow per n in [n_from, n_to]; requires 4 <= n_from <= n_to."""
    _require_n(n_from)
    if n_to < n_from:
        raise UnsupportedN(f"empty range: n_from={n_from} > n_to={n_to}")
    rows = []
    for n in range(n_from, n_to + 1):
        exact = TAU / n
        approx = method_angle(method, n)
        error = exact - approx
        rows.append(ErrorRow(n, exact, approx, error, abs(error) / exact))
    return rows


def relative_error_limit(method: Method) -> float:
    """Limit of the signed relative error 1 - n*angle(n)/(2*pi) as n grows.

    Bion: 1 - 2*sqrt(3)/pi (about -0.1026); Tempier: -(6 + 2*sqrt(3) - 3*pi)
    / (3*pi) (about -0.0042), which is exactly the quadrant-rectification
    error of the base point V.
    """
    if method is Method.BION:
        return 1.0 - 2.0 * SQRT3 / math.pi
    return -(6.0 + 2.0 * SQRT3 - 3.0 * math.pi) / (3.0 * math.pi)


def best_method(n: int) -> Method | None:
    """Method with the smaller absolute relative error at n.

    Returns None on a tie, i.e. when the two agree within 1e-4 (covers the
    exact n=4 case and the near-tie at n=8).
    """
    _require_n(n)
    exact = TAU / n
    bion = abs(exact - bion_angle(n)) / exact
    tempier = abs(exact - tempier_angle(n)) / exact
    if abs(bion - tempier) <= TIE_TOLERANCE:
        return None
    return Method.BION if bion < tempier else Method.TEMPIER


def rectified_quadrant(base_distance: float) -> RectificationResult:
    """Straighten a unit-circle quadrant by projecting from a base point.

    A base point at the given distance below the center projects the
    quadrant's top onto the tangent line so that the rectified quadrant has
    length (d+1)/d; twice that is the implied approximation of pi.
    """
    if not (base_distance > 0.0 and math.isfinite(base_distance)):
        raise ValueError(f"base distance must be positive, got {base_distance}")
    return RectificationResult(
        base_distance, 2.0 * (base_distance + 1.0) / base_distance
    )


def exact_rectifier_distance() -> float:
    """Base distance whose rectified quadrant is exact: 2/(pi - 2).

    Transcendental, hence not constructible; the nearby constructible
    distances sqrt(3) and 7/4 are what the practical recipes use.
    """
    return 2.0 / (math.pi - 2.0)
