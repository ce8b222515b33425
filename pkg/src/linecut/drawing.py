"""Crossing-free straight-line drawings of triangulations on a given line set.

The constructive pipeline: normalise the lines, compute a canonical ordering
and its frame, assign vertices to lines by a linear extension of the frame,
then place vertices top-down in ever thinner horizontal slabs above the
x-axis, where the lines are ordered left to right by their x-intercepts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import floor
from typing import Optional, Sequence

from .errors import InductionViolation
from .geometry import (
    Contact,
    GeneralLine,
    InterceptLine,
    Point,
    Segment,
    line_intersection,
    point_on_segment,
    segments_cross,
)
from .mu import Arrangement
from .planar import EmbeddedTriangulation, canonical_ordering, frame, linear_extension


@dataclass(frozen=True)
class AffineShear:
    """``(x, y) -> (x + l1*y', y' - t)`` with ``y' = y + l2*x``."""

    l1: Fraction = Fraction(0)
    l2: Fraction = Fraction(0)
    shift: Fraction = Fraction(0)

    def forward(self, p: Point) -> Point:
        y = p.y + self.l2 * p.x
        return Point(p.x + self.l1 * y, y - self.shift)

    def inverse(self, p: Point) -> Point:
        y = p.y + self.shift
        x = p.x - self.l1 * y
        return Point(x, y - self.l2 * x)

    def map_line(self, line: GeneralLine) -> GeneralLine:
        return GeneralLine.through(self.forward(line.point_at(Fraction(0))), self.forward(line.point_at(Fraction(1))))


@dataclass(frozen=True)
class PreparedLines:
    original: tuple[GeneralLine, ...]
    transform: AffineShear
    lines: tuple[InterceptLine, ...]  # sorted by x-intercept
    order: tuple[int, ...]  # sorted position -> original index
    a_hat: Fraction

    @property
    def shift(self) -> Fraction:
        return self.transform.shift

    def min_gap(self) -> Fraction:
        b = [l.x_intercept for l in self.lines]
        return min(q - p for p, q in zip(b, b[1:]))


def _avoiding(bad: set[Fraction]) -> Fraction:
    k = 1
    while Fraction(k) in bad:
        k += 1
    return Fraction(k)


def prepare_lines(L: Sequence[GeneralLine]) -> PreparedLines:
    """Shear away horizontal and vertical lines, then translate down so every
    arrangement vertex has negative y."""
    L = tuple(L)
    Arrangement(L)  # raises ParallelLines
    l2 = Fraction(0)
    if any(l.is_horizontal() for l in L):
        # y-shear turns slope m into m + l2; avoid creating a new horizontal
        l2 = _avoiding({l.a / l.b for l in L if not l.is_vertical()})
    sheared = [AffineShear(l2=l2).map_line(l) for l in L]
    l1 = Fraction(0)
    if any(l.is_vertical() for l in sheared):
        # x-shear sends direction (1, m) to (1 + l1*m, m)
        l1 = _avoiding({-1 / (-l.a / l.b) for l in sheared if not l.is_vertical()})
    base = AffineShear(l1=l1, l2=l2)
    moved = [base.map_line(l) for l in L]
    ys = [p.y for p in Arrangement(moved).vertex_map.values()]
    top = max(ys, default=Fraction(-1))
    shift = Fraction(floor(top) + 1) if top >= 0 else Fraction(0)
    transform = AffineShear(l1=l1, l2=l2, shift=shift)
    final = [InterceptLine.from_general(transform.map_line(l)) for l in L]
    order = tuple(sorted(range(len(L)), key=lambda i: final[i].x_intercept))
    lines = tuple(final[i] for i in order)
    for p, q in zip(lines, lines[1:]):
        if not p.x_intercept < q.x_intercept:
            raise InductionViolation("x-intercepts are not distinct after translation")
        if not 1 / p.slope < 1 / q.slope:
            raise InductionViolation("inverse slopes are not sorted with the x-intercepts")
    a_hat = min(abs(l.slope) for l in lines)
    return PreparedLines(L, transform, lines, order, a_hat)


@dataclass(frozen=True)
class TraceStep:
    index: int  # canonical index i (1-based)
    vertex: int
    height: Fraction  # h_i
    slope: Fraction  # s
    cone: Fraction  # y_hat_s
    y1: Fraction
    y2: Fraction
    next_height: Fraction  # h_{i-1}


@dataclass(frozen=True)
class Drawing:
    assignment: tuple[int, ...]  # vertex -> original line index
    points: tuple[Point, ...]  # vertex -> point, original coordinates
    edges: tuple[tuple[int, int], ...]
    trace: tuple[TraceStep, ...] = ()
    prepared_points: Optional[tuple[Point, ...]] = None


def _abs_slope(p: Point, q: Point) -> Optional[Fraction]:
    """|slope| of pq, ``None`` for vertical."""
    if p.x == q.x:
        return None
    return abs((q.y - p.y) / (q.x - p.x))


def _meet_height(apex: Point, s: Fraction, line: InterceptLine, fallback_x: Fraction) -> Fraction:
    """Height where the line of slope ``s`` through ``apex`` meets ``line``.

    When they are parallel, use the height of the slope line above
    ``fallback_x`` (the line's x-intercept) instead.
    """
    if line.slope == s:
        return apex.y + s * (fallback_x - apex.x)
    x = (apex.y - s * apex.x + line.slope * line.x_intercept) / (line.slope - s)
    return apex.y + s * (x - apex.x)


def draw_on_lines(g: EmbeddedTriangulation, L: Sequence[GeneralLine]) -> Drawing:
    """Place every vertex of ``g`` on a distinct line of ``L`` without crossings."""
    n = g.n
    if len(L) != n:
        raise ValueError(f"need exactly {n} lines, got {len(L)}")
    P = prepare_lines(L)
    order = canonical_ordering(g)
    rho = linear_extension(frame(g, order))
    v1, v2 = order[0], order[1]
    if rho[0] != v1 or rho[-1] != v2:
        raise InductionViolation("linear extension does not start at v1 and end at v2")

    slot = {v: k for k, v in enumerate(rho)}  # vertex -> sorted line position
    lines = P.lines
    first, last = lines[0], lines[-1]
    gap = P.min_gap()

    pts: dict[int, Point] = {
        v1: Point(first.x_intercept, Fraction(0)),
        v2: Point(last.x_intercept, Fraction(0)),
    }
    trace = []
    h = Fraction(1)
    for i in range(n, 2, -1):
        v = order[i - 1]
        ln = lines[slot[v]]
        p = Point(ln.x_at(h), h)
        pts[v] = p
        bounds = [b for b in (_abs_slope(pts[v1], p), _abs_slope(p, pts[v2])) if b is not None]
        s = min(min(bounds) / 2, P.a_hat)
        if s <= 0:
            raise InductionViolation(f"step {i}: slope bound is not positive")
        y1 = _meet_height(p, s, first, first.x_intercept)
        y2 = _meet_height(p, -s, last, last.x_intercept)
        cone = s * gap / 2
        nxt = min(y1, y2, cone, h / 2)
        if not (y1 > 0 and y2 > 0 and nxt > 0):
            raise InductionViolation(f"step {i}: y1={y1}, y2={y2} must be positive")
        trace.append(TraceStep(i, v, h, s, cone, y1, y2, nxt))
        h = nxt

    prepared = tuple(pts[v] for v in range(n))
    points = tuple(P.transform.inverse(q) for q in prepared)
    assignment = tuple(P.order[slot[v]] for v in range(n))
    d = Drawing(assignment, points, tuple(g.edges()), tuple(trace), prepared)
    rep = verify_drawing(g, L, d)
    if not rep.ok:
        raise InductionViolation("constructed drawing fails verification: " + "; ".join(rep.violations))
    return d


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

CHECKS = ("bijection", "incidence", "crossing", "vertex_on_edge", "distinct")


@dataclass
class DrawingReport:
    checks: dict[str, bool] = field(default_factory=lambda: {c: True for c in CHECKS})
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, check: str, msg: str) -> None:
        self.checks[check] = False
        self.violations.append(f"{check}: {msg}")


def _edge_pair_bad(e: tuple[int, int], f: tuple[int, int], pts: Sequence[Point]) -> bool:
    c = segments_cross(Segment(pts[e[0]], pts[e[1]]), Segment(pts[f[0]], pts[f[1]]))
    if set(e) & set(f):
        return c is Contact.CROSSING
    return c is not Contact.DISJOINT


def verify_drawing(g: EmbeddedTriangulation, L: Sequence[GeneralLine], d: Drawing) -> DrawingReport:
    rep = DrawingReport()
    n = g.n
    if len(d.assignment) != n or sorted(d.assignment) != list(range(len(L))) or len(L) != n:
        rep.fail("bijection", "assignment is not a bijection between vertices and lines")
        return rep
    if len(d.points) != n:
        rep.fail("bijection", "wrong number of points")
        return rep
    for v, (j, p) in enumerate(zip(d.assignment, d.points)):
        if not L[j].contains(p):
            rep.fail("incidence", f"vertex {v} at {p} is not on line {j}")
    seen: dict[Point, int] = {}
    for v, p in enumerate(d.points):
        if p in seen:
            rep.fail("distinct", f"vertices {seen[p]} and {v} coincide")
        seen.setdefault(p, v)
    edges = g.edges()
    pts = d.points
    for v, p in enumerate(pts):
        for a, b in edges:
            if v in (a, b) or pts[a] == pts[b]:
                continue
            if point_on_segment(p, Segment(pts[a], pts[b])):
                rep.fail("vertex_on_edge", f"vertex {v} lies on edge {a}-{b}")
    for e, f in combinations(edges, 2):
        if pts[e[0]] == pts[e[1]] or pts[f[0]] == pts[f[1]]:
            continue
        if _edge_pair_bad(e, f, pts):
            rep.fail("crossing", f"edges {e} and {f} cross")
    return rep


# ---------------------------------------------------------------------------
# Randomised search for a drawing with a prescribed labelling
# ---------------------------------------------------------------------------


def _param_ranges(L: Sequence[GeneralLine]) -> list[tuple[Fraction, Fraction]]:
    """Per line, a parameter window covering its vertices with margin."""
    out = []
    for i, l in enumerate(L):
        d = l.direction()
        base = l.point_at(Fraction(0))
        ts = []
        for j, m in enumerate(L):
            if i == j:
                continue
            p = line_intersection(l, m)
            if isinstance(p, Point):
                if d.x != 0:
                    ts.append((p.x - base.x) / d.x)
                else:
                    ts.append((p.y - base.y) / d.y)
        lo, hi = (min(ts), max(ts)) if ts else (Fraction(-1), Fraction(1))
        w = (hi - lo) / 2 + 1
        out.append((lo - w, hi + w))
    return out


def _sample(rng: random.Random, lo: Fraction, hi: Fraction, den: int = 64) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.randint(0, den), den)


def falsify_support(
    g: EmbeddedTriangulation,
    labelling: Sequence[int],
    L: Sequence[GeneralLine],
    budget: int = 2000,
    seed: int = 0,
    patience: int = 60,
) -> Optional[Drawing]:
    """Search for a crossing-free drawing with vertex ``v`` on ``L[labelling[v]]``.

    Random restarts plus single-vertex resampling, minimising the number of
    bad edge pairs.  ``budget`` counts candidate evaluations.  Returns
    ``None`` when nothing is found, which proves nothing.
    """
    n = g.n
    if len(L) != n or sorted(labelling) != list(range(n)):
        raise ValueError("labelling must be a bijection onto the lines")
    Arrangement(L)
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(n)]
    for k, (a, b) in enumerate(edges):
        incident[a].append(k)
        incident[b].append(k)
    ranges = _param_ranges(L)
    lines = [L[labelling[v]] for v in range(n)]
    win = [ranges[labelling[v]] for v in range(n)]

    def bad_pairs(pts, ks) -> int:
        total = 0
        ks = set(ks)
        for k in ks:
            e = edges[k]
            if pts[e[0]] == pts[e[1]]:
                total += len(edges)
                continue
            for m, f in enumerate(edges):
                if m == k or (m in ks and m < k):
                    continue
                if pts[f[0]] == pts[f[1]]:
                    total += 1
                elif _edge_pair_bad(e, f, pts):
                    total += 1
        return total

    spent = 0
    restart = 0
    while spent < budget:
        rng = random.Random(seed * 1_000_003 + restart)
        restart += 1
        ts = [_sample(rng, *win[v]) for v in range(n)]
        pts = [lines[v].point_at(ts[v]) for v in range(n)]
        cost = bad_pairs(pts, range(len(edges)))
        spent += 1
        stale = 0
        while cost > 0 and spent < budget and stale < patience:
            v = rng.randrange(n)
            old_t, old_p = ts[v], pts[v]
            before = bad_pairs(pts, incident[v])
            ts[v] = _sample(rng, *win[v])
            pts[v] = lines[v].point_at(ts[v])
            after = bad_pairs(pts, incident[v])
            spent += 1
            if after <= before:
                stale = stale + 1 if after == before else 0
                cost += after - before
            else:
                ts[v], pts[v] = old_t, old_p
                stale += 1
        if cost == 0:
            d = Drawing(tuple(labelling), tuple(pts), tuple(edges))
            if verify_drawing(g, L, d).ok:
                return d
    return None
