"""A small textual language for ruler-and-compass construction programs.

One statement per line, ``#`` comments, whitespace-insensitive tokens::

    point NAME = ( NUM , NUM )
    line NAME = NAME NAME
    circle NAME = NAME NAME                  # center, through-point
    circle NAME = NAME radius NAME NAME      # center, radius |NAME NAME|
    intersect NAME [NAME] = NAME NAME [pick SELECTOR]
    divide NAME = NAME NAME NUM NUM          # endpoints, parts n, index k
    angle NAME = NAME NAME NAME              # vertex, p, q

    SELECTOR := first | second | upper | lower | left | right | near NAME
    NUM      := decimal literal, or the exact tokens `pi` / `sqrt3`
                (optionally preceded by `-`)

The ``pi`` and ``sqrt3`` tokens carry exact irrational values into programs
without an expression grammar; the formatter prints them back symbolically.
An intersect statement with one result name defaults to selector ``first``;
with two result names it binds both intersection points in kernel order and
admits no pick clause.

``parse`` -> ``format_program`` round-trips structurally; ``evaluate`` runs a
program against the geometry kernel and returns a ``Figure``.  Name scoping
errors (unknown/duplicate) surface at evaluation, not parse.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .geometry import (
    Circle,
    Curve,
    DEFAULT_TOLERANCE,
    Line,
    Point,
    Tolerance,
    angle as measure_angle,
    distance,
    divide_segment,
    intersect as intersect_curves,
)

__all__ = [
    "Num",
    "Selector",
    "PointDef",
    "LineDef",
    "CircleDef",
    "CircleRadDef",
    "Intersect",
    "Divide",
    "MeasureAngle",
    "Statement",
    "Program",
    "Figure",
    "ParseError",
    "EvalError",
    "UnknownName",
    "DuplicateName",
    "SelectorEmpty",
    "parse",
    "evaluate",
    "format_program",
]


class ParseError(Exception):
    """Syntax error at a specific token; line and column are 1-based."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class EvalError(Exception):
    """Base class for failures while executing a program."""


class UnknownName(EvalError):
    """A statement references a name not bound by an earlier statement."""


class DuplicateName(EvalError):
    """A statement rebinds a name that is already defined."""


class SelectorEmpty(EvalError):
    """A selector was applied to too few intersection points."""


_SYMBOLIC = {"pi": math.pi, "sqrt3": math.sqrt(3.0)}

_SELECTOR_KINDS = frozenset(
    {"first", "second", "upper", "lower", "left", "right", "near", "both"}
)

_KEYWORDS = frozenset(
    {
        "point", "line", "circle", "intersect", "divide", "angle",
        "pick", "radius", "near", "both",
        "first", "second", "upper", "lower", "left", "right",
        "pi", "sqrt3",
    }
)


@dataclass(frozen=True, slots=True)
class Num:
    """A numeric literal; `symbol` records symbolic spelling (pi / sqrt3)."""

    value: float
    symbol: str | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError(f"numeric literal must be finite, got {self.value}")
        if self.symbol is not None and self.symbol not in _SYMBOLIC:
            raise ValueError(f"unknown symbolic literal {self.symbol!r}")


@dataclass(frozen=True, slots=True)
class Selector:
    """Disambiguates which intersection point(s) a statement binds."""

    kind: str
    ref: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in _SELECTOR_KINDS:
            raise ValueError(f"unknown selector kind {self.kind!r}")
        if (self.ref is not None) != (self.kind == "near"):
            raise ValueError("selector `near` takes a point name; others take none")


@dataclass(frozen=True, slots=True)
class PointDef:
    name: str
    x: Num
    y: Num


@dataclass(frozen=True, slots=True)
class LineDef:
    name: str
    a: str
    b: str


@dataclass(frozen=True, slots=True)
class CircleDef:
    name: str
    center: str
    through: str


@dataclass(frozen=True, slots=True)
class CircleRadDef:
    """Circle with the compass opened to the span of two other points."""

    name: str
    center: str
    rad_from: str
    rad_to: str


@dataclass(frozen=True, slots=True)
class Intersect:
    names: tuple[str, ...]
    a: str
    b: str
    pick: Selector

    def __post_init__(self) -> None:
        if len(self.names) not in (1, 2):
            raise ValueError("intersect binds one or two names")
        if (len(self.names) == 2) != (self.pick.kind == "both"):
            raise ValueError("selector `both` goes with exactly two result names")


@dataclass(frozen=True, slots=True)
class Divide:
    name: str
    start: str
    end: str
    n: int
    k: int


@dataclass(frozen=True, slots=True)
class MeasureAngle:
    name: str
    vertex: str
    p: str
    q: str


Statement = (
    PointDef | LineDef | CircleDef | CircleRadDef | Intersect | Divide | MeasureAngle
)


@dataclass(frozen=True, slots=True)
class Program:
    statements: tuple[Statement, ...]

    def __post_init__(self) -> None:
        if not self.statements:
            raise ValueError("a program holds at least one statement")


@dataclass(slots=True)
class Figure:
    """Evaluation result: named points, curves and measured scalars.

    The three namespaces are disjoint and each map preserves the order in
    which the program bound its names.
    """

    points: dict[str, Point] = field(default_factory=dict)
    curves: dict[str, Curve] = field(default_factory=dict)
    scalars: dict[str, float] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not (self.points or self.curves or self.scalars)

    def _bind(self, kind: dict, name: str, value) -> None:
        if name in self.points or name in self.curves or name in self.scalars:
            raise DuplicateName(f"name {name!r} is already defined")
        kind[name] = value


# --- tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<comment>\#.*)
  | (?P<number>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>[=(),-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class _Token:
    text: str
    kind: str  # "number" | "name" | "sym" | "end"
    line: int
    column: int


def _tokenize_line(text: str, lineno: int) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(lineno, pos + 1, f"unexpected character {text[pos]!r}")
        pos = m.end()
        if m.lastgroup in ("ws", "comment"):
            continue
        tokens.append(_Token(m.group(), m.lastgroup, lineno, m.start() + 1))
    tokens.append(_Token("", "end", lineno, len(text) + 1))
    return tokens


class _LineParser:
    def __init__(self, tokens: list[_Token]):
        self._tokens = tokens
        self._pos = 0

    @property
    def current(self) -> _Token:
        return self._tokens[self._pos]

    def _advance(self) -> _Token:
        tok = self.current
        if tok.kind != "end":
            self._pos += 1
        return tok

    def _fail(self, message: str) -> ParseError:
        tok = self.current
        return ParseError(tok.line, tok.column, message)

    def _expect_sym(self, sym: str) -> None:
        if self.current.kind != "sym" or self.current.text != sym:
            raise self._fail(f"expected {sym!r}, found {self._describe()}")
        self._advance()

    def _expect_keyword(self, word: str) -> None:
        if self.current.kind != "name" or self.current.text != word:
            raise self._fail(f"expected {word!r}, found {self._describe()}")
        self._advance()

    def _describe(self) -> str:
        tok = self.current
        return "end of line" if tok.kind == "end" else repr(tok.text)

    def _name(self) -> str:
        tok = self.current
        if tok.kind != "name":
            raise self._fail(f"expected a name, found {self._describe()}")
        if tok.text in _KEYWORDS:
            raise self._fail(f"{tok.text!r} is a reserved word")
        self._advance()
        return tok.text

    def _num(self) -> Num:
        negative = False
        if self.current.kind == "sym" and self.current.text == "-":
            negative = True
            self._advance()
        tok = self.current
        if tok.kind == "name" and tok.text in _SYMBOLIC:
            self._advance()
            value = _SYMBOLIC[tok.text]
            return Num(-value if negative else value, tok.text)
        if tok.kind != "number":
            raise self._fail(f"expected a number, found {self._describe()}")
        value = float(tok.text)
        if not math.isfinite(value):
            raise self._fail(f"numeric literal out of range: {tok.text}")
        self._advance()
        return Num(-value if negative else value)

    def _int(self) -> int:
        tok = self.current
        num = self._num()
        if num.symbol is not None or num.value != int(num.value):
            raise ParseError(tok.line, tok.column, "expected an integer")
        return int(num.value)

    def _end(self) -> None:
        if self.current.kind != "end":
            raise self._fail(f"unexpected trailing token {self._describe()}")

    def statement(self) -> Statement:
        tok = self.current
        if tok.kind != "name":
            raise self._fail(f"expected a statement keyword, found {self._describe()}")
        handler = {
            "point": self._point,
            "line": self._line,
            "circle": self._circle,
            "intersect": self._intersect,
            "divide": self._divide,
            "angle": self._angle,
        }.get(tok.text)
        if handler is None:
            raise self._fail(f"unknown statement keyword {tok.text!r}")
        self._advance()
        stmt = handler()
        self._end()
        return stmt

    def _point(self) -> PointDef:
        name = self._name()
        self._expect_sym("=")
        self._expect_sym("(")
        x = self._num()
        self._expect_sym(",")
        y = self._num()
        self._expect_sym(")")
        return PointDef(name, x, y)

    def _line(self) -> LineDef:
        name = self._name()
        self._expect_sym("=")
        return LineDef(name, self._name(), self._name())

    def _circle(self) -> CircleDef | CircleRadDef:
        name = self._name()
        self._expect_sym("=")
        center = self._name()
        if self.current.kind == "name" and self.current.text == "radius":
            self._advance()
            return CircleRadDef(name, center, self._name(), self._name())
        return CircleDef(name, center, self._name())

    def _intersect(self) -> Intersect:
        first = self._name()
        names = (first,)
        if self.current.kind == "name" and self.current.text not in _KEYWORDS:
            names = (first, self._name())
        self._expect_sym("=")
        a = self._name()
        b = self._name()
        if self.current.kind == "name" and self.current.text == "pick":
            if len(names) == 2:
                raise self._fail("pick clause not allowed with two result names")
            self._advance()
            return Intersect(names, a, b, self._selector())
        pick = Selector("both") if len(names) == 2 else Selector("first")
        return Intersect(names, a, b, pick)

    def _selector(self) -> Selector:
        tok = self.current
        if tok.kind != "name" or tok.text not in (
            "first", "second", "upper", "lower", "left", "right", "near",
        ):
            raise self._fail(f"expected a selector, found {self._describe()}")
        self._advance()
        if tok.text == "near":
            return Selector("near", self._name())
        return Selector(tok.text)

    def _divide(self) -> Divide:
        name = self._name()
        self._expect_sym("=")
        return Divide(name, self._name(), self._name(), self._int(), self._int())

    def _angle(self) -> MeasureAngle:
        name = self._name()
        self._expect_sym("=")
        return MeasureAngle(name, self._name(), self._name(), self._name())


def parse(text: str) -> Program:
    """Parse program text; raises ParseError at the first offending token."""
    statements: list[Statement] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize_line(raw.rstrip("\r"), lineno)
        if tokens[0].kind == "end":
            continue
        statements.append(_LineParser(tokens).statement())
    if not statements:
        raise ParseError(max(lineno, 1), 1, "program contains no statements")
    return Program(tuple(statements))


# --- formatter ---------------------------------------------------------------

def _num_text(num: Num) -> str:
    if num.symbol is not None:
        return ("-" + num.symbol) if num.value < 0 else num.symbol
    v = num.value
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def _selector_text(pick: Selector) -> str:
    return f"near {pick.ref}" if pick.kind == "near" else pick.kind


def format_statement(stmt: Statement) -> str:
    match stmt:
        case PointDef(name, x, y):
            return f"point {name} = ({_num_text(x)}, {_num_text(y)})"
        case LineDef(name, a, b):
            return f"line {name} = {a} {b}"
        case CircleDef(name, center, through):
            return f"circle {name} = {center} {through}"
        case CircleRadDef(name, center, rad_from, rad_to):
            return f"circle {name} = {center} radius {rad_from} {rad_to}"
        case Intersect(names, a, b, pick):
            if pick.kind == "both":
                return f"intersect {names[0]} {names[1]} = {a} {b}"
            return f"intersect {names[0]} = {a} {b} pick {_selector_text(pick)}"
        case Divide(name, start, end, n, k):
            return f"divide {name} = {start} {end} {n} {k}"
        case MeasureAngle(name, vertex, p, q):
            return f"angle {name} = {vertex} {p} {q}"
    raise TypeError(f"not a statement: {stmt!r}")


def format_program(program: Program) -> str:
    """Canonical text: one statement per line, single spaces, LF endings."""
    return "\n".join(format_statement(s) for s in program.statements) + "\n"


# --- evaluator ---------------------------------------------------------------

def _lookup_point(fig: Figure, name: str) -> Point:
    try:
        return fig.points[name]
    except KeyError:
        kind = "curve" if name in fig.curves else "scalar" if name in fig.scalars else None
        if kind:
            raise UnknownName(f"{name!r} names a {kind}, expected a point") from None
        raise UnknownName(f"no point named {name!r}") from None


def _lookup_curve(fig: Figure, name: str) -> Curve:
    try:
        return fig.curves[name]
    except KeyError:
        kind = "point" if name in fig.points else "scalar" if name in fig.scalars else None
        if kind:
            raise UnknownName(f"{name!r} names a {kind}, expected a curve") from None
        raise UnknownName(f"no curve named {name!r}") from None


def _select(pick: Selector, points: list[Point], fig: Figure) -> Point:
    if not points:
        raise SelectorEmpty(f"selector {pick.kind!r} applied to an empty intersection")
    # Kernel order is sorted ascending by (x, y); min/max keep the first
    # extremal entry, so coordinate ties resolve to the kernel-order point.
    match pick.kind:
        case "first":
            return points[0]
        case "second":
            if len(points) < 2:
                raise SelectorEmpty("selector 'second' needs two intersection points")
            return points[1]
        case "upper":
            return max(points, key=lambda p: p.y)
        case "lower":
            return min(points, key=lambda p: p.y)
        case "left":
            return min(points, key=lambda p: p.x)
        case "right":
            return max(points, key=lambda p: p.x)
        case "near":
            anchor = _lookup_point(fig, pick.ref)
            return min(points, key=lambda p: distance(anchor, p))
    raise ValueError(f"selector {pick.kind!r} does not pick a single point")


def evaluate(program: Program, tol: Tolerance = DEFAULT_TOLERANCE) -> Figure:
    """Execute statements in order against the geometry kernel.

    Raises UnknownName / DuplicateName for scoping faults, SelectorEmpty when
    a construction fails geometrically, and propagates kernel errors
    (CoincidentCurves, DegenerateAngle, BadIndex) unchanged.
    """
    fig = Figure()
    for stmt in program.statements:
        match stmt:
            case PointDef(name, x, y):
                fig._bind(fig.points, name, Point(x.value, y.value))
            case LineDef(name, a, b):
                fig._bind(fig.curves, name, Line(_lookup_point(fig, a), _lookup_point(fig, b)))
            case CircleDef(name, center, through):
                c = _lookup_point(fig, center)
                fig._bind(fig.curves, name, Circle(c, distance(c, _lookup_point(fig, through))))
            case CircleRadDef(name, center, rad_from, rad_to):
                radius = distance(_lookup_point(fig, rad_from), _lookup_point(fig, rad_to))
                fig._bind(fig.curves, name, Circle(_lookup_point(fig, center), radius))
            case Intersect(names, a, b, pick):
                hits = intersect_curves(_lookup_curve(fig, a), _lookup_curve(fig, b), tol)
                if pick.kind == "both":
                    if len(hits) < 2:
                        raise SelectorEmpty(
                            f"binding {names[0]!r} and {names[1]!r} needs two "
                            f"intersection points, got {len(hits)}"
                        )
                    fig._bind(fig.points, names[0], hits[0])
                    fig._bind(fig.points, names[1], hits[1])
                else:
                    fig._bind(fig.points, names[0], _select(pick, hits, fig))
            case Divide(name, start, end, n, k):
                fig._bind(
                    fig.points,
                    name,
                    divide_segment(_lookup_point(fig, start), _lookup_point(fig, end), n, k, tol),
                )
            case MeasureAngle(name, vertex, p, q):
                value = measure_angle(
                    _lookup_point(fig, vertex), _lookup_point(fig, p), _lookup_point(fig, q), tol
                )
                fig._bind(fig.scalars, name, value)
    return fig
