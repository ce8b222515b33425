"""JSON file formats for line sets, embedded graphs and drawings.

Rationals travel as strings (``"p/q"`` or ``"p"``) and are written back in
lowest terms, so ``serialize(parse(text)) == text`` for canonical files.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from .drawing import Drawing, TraceStep
from .errors import LinecutError, ParallelLines
from .geometry import GeneralLine, InterceptLine, Point, format_scalar
from .mu import Arrangement
from .planar import EmbeddedTriangulation, validate_triangulation

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ParseError(LinecutError, ValueError):
    """Malformed JSON; carries the 1-based line and column."""

    def __init__(self, msg: str, line: int = 0, column: int = 0):
        super().__init__(f"{msg} (line {line}, column {column})")
        self.line = line
        self.column = column


class ValidationError(LinecutError, ValueError):
    """Well-formed JSON that does not describe a valid object."""


def parse_rational(value: Any, where: str = "value") -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ValidationError(f"{where}: expected a rational string like \"3/4\", got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    m = _RATIONAL.match(value)
    if not m:
        raise ValidationError(f"{where}: {value!r} is not of the form p/q or p")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValidationError(f"{where}: zero denominator in {value!r}")
    return Fraction(num, den)


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc


def _field(obj: Any, key: str, kind: Any, where: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise ValidationError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        names = " or ".join(k.__name__ for k in kind) if isinstance(kind, tuple) else kind.__name__
        raise ValidationError(f"{where}: field {key!r} must be {names}")
    return val


def _point_json(p: Point) -> list[str]:
    return [format_scalar(p.x), format_scalar(p.y)]


# ---------------------------------------------------------------------------
# Line sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineSetFile:
    lines: tuple[GeneralLine, ...]

    @classmethod
    def parse(cls, text: str) -> "LineSetFile":
        data = load_json(text)
        if not isinstance(data, dict) or ("lines" not in data and "intercept" not in data):
            raise ValidationError("line set: expected an object with a \"lines\" array")
        lines: list[GeneralLine] = []
        for k, item in enumerate(data.get("lines", [])):
            where = f"lines[{k}]"
            a, b, c = (parse_rational(_field(item, key, (str, int), where), f"{where}.{key}") for key in "abc")
            if a == 0 and b == 0:
                raise ValidationError(f"{where}: a and b are both zero")
            lines.append(GeneralLine(a, b, c))
        for k, item in enumerate(data.get("intercept", [])):
            where = f"intercept[{k}]"
            m = parse_rational(_field(item, "slope", (str, int), where), f"{where}.slope")
            x0 = parse_rational(_field(item, "x_intercept", (str, int), where), f"{where}.x_intercept")
            if m == 0:
                raise ValidationError(f"{where}: slope must be nonzero")
            lines.append(InterceptLine(m, x0).to_general())
        if not lines:
            raise ValidationError("line set is empty")
        try:
            Arrangement(lines)
        except ParallelLines as exc:
            raise ValidationError(f"line set: {exc}") from exc
        return cls(tuple(lines))

    def serialize(self) -> str:
        return dump_json(
            {"lines": [{"a": format_scalar(l.a), "b": format_scalar(l.b), "c": format_scalar(l.c)} for l in self.lines]}
        )

    def arrangement(self) -> Arrangement:
        return Arrangement(self.lines)


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphFile:
    graph: EmbeddedTriangulation

    @classmethod
    def parse(cls, text: str) -> "GraphFile":
        data = load_json(text)
        n = _field(data, "n", int, "graph")
        rotation = _field(data, "rotation", list, "graph")
        outer = _field(data, "outer", list, "graph")
        if len(rotation) != n:
            raise ValidationError(f"graph: rotation has {len(rotation)} entries, n = {n}")
        for v, r in enumerate(rotation):
            if not isinstance(r, list) or not all(isinstance(u, int) and not isinstance(u, bool) for u in r):
                raise ValidationError(f"graph: rotation[{v}] must be a list of vertex ids")
        if len(outer) != 3 or not all(isinstance(u, int) and not isinstance(u, bool) for u in outer):
            raise ValidationError("graph: outer must list three vertex ids")
        g = EmbeddedTriangulation(n, tuple(tuple(r) for r in rotation), tuple(outer))
        rep = validate_triangulation(g)
        if not rep.ok:
            raise ValidationError("graph: " + "; ".join(rep.violations))
        return cls(g)

    def serialize(self) -> str:
        g = self.graph
        return dump_json({"n": g.n, "rotation": [list(r) for r in g.rotation], "outer": list(g.outer)})


# ---------------------------------------------------------------------------
# Drawings
# ---------------------------------------------------------------------------

_TRACE_FIELDS = ("height", "slope", "cone", "y1", "y2", "next_height")


@dataclass(frozen=True)
class DrawingFile:
    drawing: Drawing

    @classmethod
    def parse(cls, text: str) -> "DrawingFile":
        data = load_json(text)
        rows = _field(data, "assignment", list, "drawing")
        edges = _field(data, "edges", list, "drawing")
        n = len(rows)
        assignment: list[Optional[int]] = [None] * n
        points: list[Optional[Point]] = [None] * n
        for k, row in enumerate(rows):
            where = f"assignment[{k}]"
            v = _field(row, "vertex", int, where)
            j = _field(row, "line", int, where)
            pt = _field(row, "point", list, where)
            if not (0 <= v < n) or assignment[v] is not None:
                raise ValidationError(f"{where}: vertex {v} out of range or repeated")
            if len(pt) != 2:
                raise ValidationError(f"{where}: point needs two coordinates")
            assignment[v] = j
            points[v] = Point(parse_rational(pt[0], f"{where}.point"), parse_rational(pt[1], f"{where}.point"))
        es = []
        for e in edges:
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(u, int) and 0 <= u < n for u in e)):
                raise ValidationError(f"drawing: bad edge {e!r}")
            es.append((e[0], e[1]))
        trace = []
        for k, row in enumerate(data.get("trace", [])):
            where = f"trace[{k}]"
            vals = [parse_rational(_field(row, f, (str, int), where), f"{where}.{f}") for f in _TRACE_FIELDS]
            trace.append(TraceStep(_field(row, "index", int, where), _field(row, "vertex", int, where), *vals))
        return cls(Drawing(tuple(assignment), tuple(points), tuple(es), tuple(trace)))  # type: ignore[arg-type]

    def serialize(self, include_trace: bool = True) -> str:
        d = self.drawing
        out: dict[str, Any] = {
            "assignment": [
                {"vertex": v, "line": j, "point": _point_json(p)} for v, (j, p) in enumerate(zip(d.assignment, d.points))
            ],
            "edges": [list(e) for e in d.edges],
        }
        if include_trace and d.trace:
            out["trace"] = [
                {"index": t.index, "vertex": t.vertex, **{f: format_scalar(getattr(t, f)) for f in _TRACE_FIELDS}}
                for t in d.trace
            ]
        return dump_json(out)


def read_lines(path: str) -> LineSetFile:
    with open(path, encoding="utf-8") as fh:
        return LineSetFile.parse(fh.read())


def read_graph(path: str) -> GraphFile:
    with open(path, encoding="utf-8") as fh:
        return GraphFile.parse(fh.read())


def read_drawing(path: str) -> DrawingFile:
    with open(path, encoding="utf-8") as fh:
        return DrawingFile.parse(fh.read())


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def lines_to_file(lines: Sequence[GeneralLine]) -> LineSetFile:
    return LineSetFile(tuple(lines))
