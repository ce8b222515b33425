"""Exact planar primitives over the rationals.

Every decision in the package goes through this module.  Scalars are
:class:`fractions.Fraction`; floats are rejected at the boundary so that no
rounding can leak into a predicate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Sequence, Union

Scalar = Fraction
ScalarLike = Union[int, str, Fraction]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ``value`` to an exact rational. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected int, str or Fraction, got {type(value).__name__}")


def format_scalar(value: Fraction) -> str:
    # Fraction.__str__ is already "p/q" in lowest terms, or "p" for integers.
    return str(value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def point(x: ScalarLike, y: ScalarLike) -> Point:
    return Point(as_scalar(x), as_scalar(y))


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the turn p -> q -> r: +1 left (ccw), -1 right, 0 collinear."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (d > 0) - (d < 0)


def cross(u: Point, v: Point) -> Fraction:
    return u.x * v.y - u.y * v.x


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


# ---------------------------------------------------------------------------
# Lines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneralLine:
    """The locus ``a*x + b*y = c``, scaled so the first nonzero of (a, b) is 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __init__(self, a: ScalarLike, b: ScalarLike, c: ScalarLike):
        a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a = b = 0")
        lead = a if a != 0 else b
        object.__setattr__(self, "a", a / lead)
        object.__setattr__(self, "b", b / lead)
        object.__setattr__(self, "c", c / lead)

    @classmethod
    def through(cls, p: Point, q: Point) -> "GeneralLine":
        if p == q:
            raise ValueError("need two distinct points")
        a = q.y - p.y
        b = p.x - q.x
        return cls(a, b, a * p.x + b * p.y)

    @classmethod
    def from_slope_intercept(cls, slope: ScalarLike, x_intercept: ScalarLike) -> "GeneralLine":
        """The line ``y = slope * (x - x_intercept)``."""
        m, b0 = as_scalar(slope), as_scalar(x_intercept)
        return cls(m, -1, m * b0)

    @classmethod
    def vertical(cls, x: ScalarLike) -> "GeneralLine":
        return cls(1, 0, x)

    @classmethod
    def horizontal(cls, y: ScalarLike) -> "GeneralLine":
        return cls(0, 1, y)

    def evaluate(self, p: Point) -> Fraction:
        """Signed residual a*x + b*y - c."""
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point) -> bool:
        return self.evaluate(p) == 0

    def direction(self) -> Point:
        return Point(-self.b, self.a)

    def is_vertical(self) -> bool:
        return self.b == 0

    def is_horizontal(self) -> bool:
        return self.a == 0

    def is_parallel(self, other: "GeneralLine") -> bool:
        return self.a * other.b - self.b * other.a == 0

    def key(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def integer_coefficients(self) -> tuple[int, int, int]:
        """The same locus with coprime-denominator-free integer coefficients."""
        m = lcm(self.a.denominator, self.b.denominator, self.c.denominator)
        return (int(self.a * m), int(self.b * m), int(self.c * m))

    def point_at(self, t: Fraction) -> Point:
        """A rational parametrisation of the line, ``base + t * direction``."""
        if self.b != 0:
            base = Point(Fraction(0), self.c / self.b)
        else:
            base = Point(self.c / self.a, Fraction(0))
        d = self.direction()
        return Point(base.x + t * d.x, base.y + t * d.y)

    def y_at(self, x: Fraction) -> Fraction:
        if self.b == 0:
            raise ValueError("vertical line has no y(x)")
        return (self.c - self.a * x) / self.b

    def x_at(self, y: Fraction) -> Fraction:
        if self.a == 0:
            raise ValueError("horizontal line has no x(y)")
        return (self.c - self.b * y) / self.a

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y = {self.c}"


@dataclass(frozen=True)
class InterceptLine:
    """``y = slope * (x - x_intercept)``; never horizontal nor vertical."""

    slope: Fraction
    x_intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", as_scalar(self.slope))
        object.__setattr__(self, "x_intercept", as_scalar(self.x_intercept))
        if self.slope == 0:
            raise ValueError("intercept form excludes horizontal lines")

    @classmethod
    def from_general(cls, line: GeneralLine) -> "InterceptLine":
        if line.is_vertical() or line.is_horizontal():
            raise ValueError(f"{line} has no intercept form")
        # a x + b y = c  ->  y = (-a/b) (x - c/a)
        return cls(-line.a / line.b, line.c / line.a)

    def to_general(self) -> GeneralLine:
        return GeneralLine.from_slope_intercept(self.slope, self.x_intercept)

    def x_at(self, y: Fraction) -> Fraction:
        return self.x_intercept + y / self.slope

    def y_at(self, x: Fraction) -> Fraction:
        return self.slope * (x - self.x_intercept)


class Parallel(enum.Enum):
    DISTINCT = "distinct"
    IDENTICAL = "identical"


def line_intersection(l1: GeneralLine, l2: GeneralLine) -> Union[Point, Parallel]:
    det = l1.a * l2.b - l1.b * l2.a
    if det == 0:
        # Canonical scaling makes identical loci compare equal.
        return Parallel.IDENTICAL if l1 == l2 else Parallel.DISTINCT
    x = (l1.c * l2.b - l1.b * l2.c) / det
    y = (l1.a * l2.c - l1.c * l2.a) / det
    return Point(x, y)


# ---------------------------------------------------------------------------
# Halfplanes
# ---------------------------------------------------------------------------


class Side(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Halfplane:
    """``a*x + b*y < c`` (strict) or ``a*x + b*y <= c``.

    Coefficients are rescaled by a positive factor only, so the inequality
    direction is preserved; :attr:`boundary` gives the canonical line.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    strict: bool

    def __init__(self, a: ScalarLike, b: ScalarLike, c: ScalarLike, strict: bool = False):
        a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate halfplane: a = b = 0")
        scale = abs(a) if a != 0 else abs(b)
        object.__setattr__(self, "a", a / scale)
        object.__setattr__(self, "b", b / scale)
        object.__setattr__(self, "c", c / scale)
        object.__setattr__(self, "strict", bool(strict))

    @classmethod
    def closed(cls, a: ScalarLike, b: ScalarLike, c: ScalarLike) -> "Halfplane":
        return cls(a, b, c, strict=False)

    @classmethod
    def open(cls, a: ScalarLike, b: ScalarLike, c: ScalarLike) -> "Halfplane":
        return cls(a, b, c, strict=True)

    @classmethod
    def parse(cls, text: str) -> "Halfplane":
        """Parse ``"a,b,c,<"`` or ``"a,b,c,<="``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4 or parts[3] not in ("<", "<="):
            raise ValueError(f"bad halfplane {text!r}; expected 'a,b,c,<' or 'a,b,c,<='")
        return cls(parts[0], parts[1], parts[2], strict=parts[3] == "<")

    @property
    def boundary(self) -> GeneralLine:
        return GeneralLine(self.a, self.b, self.c)

    @property
    def sense(self) -> str:
        return "<" if self.strict else "<="

    def evaluate(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point) -> bool:
        v = self.evaluate(p)
        return v < 0 if self.strict else v <= 0

    def complement(self) -> "Halfplane":
        return Halfplane(-self.a, -self.b, -self.c, strict=not self.strict)

    def flipped(self) -> "Halfplane":
        """The opposite halfplane over the same boundary, same openness."""
        return Halfplane(-self.a, -self.b, -self.c, strict=self.strict)

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y {self.sense} {self.c}"


def side_of(h: Halfplane, p: Point) -> Side:
    """Membership of ``p`` in ``h``; boundary points follow the halfplane's sense."""
    return Side.INSIDE if h.contains(p) else Side.OUTSIDE


def boundary_side(h: Halfplane, p: Point) -> Side:
    """Position of ``p`` relative to the boundary line, ignoring openness."""
    v = h.evaluate(p)
    if v == 0:
        return Side.BOUNDARY
    return Side.INSIDE if v < 0 else Side.OUTSIDE


# ---------------------------------------------------------------------------
# Segments
# ---------------------------------------------------------------------------


class Contact(enum.Enum):
    DISJOINT = "disjoint"
    SHARE_ENDPOINT_ONLY = "share_endpoint_only"
    CROSSING = "crossing"


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("segment endpoints must differ")


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    # r assumed collinear with p, q
    return min(p.x, q.x) <= r.x <= max(p.x, q.x) and min(p.y, q.y) <= r.y <= max(p.y, q.y)


def segments_cross(s1: Segment, s2: Segment) -> Contact:
    """Classify the contact between two closed segments.

    Anything other than a single shared endpoint counts as a crossing,
    including collinear overlap and an endpoint resting on the other
    segment's interior.
    """
    p1, q1, p2, q2 = s1.p, s1.q, s2.p, s2.q
    o1 = orient(p1, q1, p2)
    o2 = orient(p1, q1, q2)
    o3 = orient(p2, q2, p1)
    o4 = orient(p2, q2, q1)

    if o1 == 0 and o2 == 0:
        # collinear: compare projections on a non-degenerate axis
        use_x = p1.x != q1.x
        key = (lambda pt: pt.x) if use_x else (lambda pt: pt.y)
        lo = max(min(key(p1), key(q1)), min(key(p2), key(q2)))
        hi = min(max(key(p1), key(q1)), max(key(p2), key(q2)))
        if lo > hi:
            return Contact.DISJOINT
        if lo < hi:
            return Contact.CROSSING
        # a single touching point, necessarily an endpoint of both
        return Contact.SHARE_ENDPOINT_ONLY

    if o1 * o2 > 0 or o3 * o4 > 0:
        return Contact.DISJOINT
    if o1 == 0 and not _on_segment(p1, q1, p2):
        return Contact.DISJOINT
    if o2 == 0 and not _on_segment(p1, q1, q2):
        return Contact.DISJOINT
    if o3 == 0 and not _on_segment(p2, q2, p1):
        return Contact.DISJOINT
    if o4 == 0 and not _on_segment(p2, q2, q1):
        return Contact.DISJOINT
    # exactly one common point; it is an endpoint of s2 iff o1 or o2 vanish
    at_end_of_s2 = o1 == 0 or o2 == 0
    at_end_of_s1 = o3 == 0 or o4 == 0
    if at_end_of_s1 and at_end_of_s2:
        return Contact.SHARE_ENDPOINT_ONLY
    return Contact.CROSSING


def segments_meet(s1: Segment, s2: Segment) -> bool:
    return segments_cross(s1, s2) is not Contact.DISJOINT


def point_on_segment(p: Point, s: Segment) -> bool:
    return orient(s.p, s.q, p) == 0 and _on_segment(s.p, s.q, p)


# ---------------------------------------------------------------------------
# Convex hulls
# ---------------------------------------------------------------------------


def convex_hull(pts: Iterable[Point]) -> list[Point]:
    """Strictly convex hull, counter-clockwise, starting at the lowest-x point.

    Collinear boundary points are dropped.  Degenerate inputs give a single
    point or the two extreme points of a segment.
    """
    ps = sorted(set(pts))
    if len(ps) <= 2:
        return ps

    def half(seq: Sequence[Point]) -> list[Point]:
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(ps)
    upper = half(ps[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def point_in_convex(p: Point, hull: Sequence[Point]) -> bool:
    """Closed membership in a hull as produced by :func:`convex_hull`."""
    if not hull:
        return False
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        return point_on_segment(p, Segment(hull[0], hull[1]))
    m = len(hull)
    return all(orient(hull[i], hull[(i + 1) % m], p) >= 0 for i in range(m))


def hull_edges(hull: Sequence[Point]) -> list[Segment]:
    if len(hull) < 2:
        return []
    if len(hull) == 2:
        return [Segment(hull[0], hull[1])]
    return [Segment(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def hulls_intersect(h1: Sequence[Point], h2: Sequence[Point]) -> bool:
    """Do two closed convex hulls (point, segment or polygon) share a point?"""
    if not h1 or not h2:
        return False
    if any(point_in_convex(p, h2) for p in h1):
        return True
    if any(point_in_convex(p, h1) for p in h2):
        return True
    return any(segments_meet(e, f) for e in hull_edges(h1) for f in hull_edges(h2))


def strictly_separable(pts1: Iterable[Point], pts2: Iterable[Point]) -> bool:
    """Can a line leave ``pts1`` strictly on one side and ``pts2`` on the other?

    Empty sets are trivially separable.
    """
    return not hulls_intersect(convex_hull(pts1), convex_hull(pts2))


def line_meets_hull(line: GeneralLine, hull: Sequence[Point]) -> bool:
    """Does ``line`` touch or cross the closed hull?"""
    if not hull:
        return False
    signs = {(v > 0) - (v < 0) for v in (line.evaluate(p) for p in hull)}
    return 0 in signs or (1 in signs and -1 in signs)


def in_convex_position(pts: Sequence[Point]) -> bool:
    """True when every point is a strict vertex of the hull of the set."""
    if len(set(pts)) != len(pts):
        return False
    if len(pts) <= 2:
        return True
    return len(convex_hull(pts)) == len(pts)


def _closest_on_segment(p: Point, s: Segment) -> Point:
    d = Point(s.q.x - s.p.x, s.q.y - s.p.y)
    t = ((p.x - s.p.x) * d.x + (p.y - s.p.y) * d.y) / (d.x * d.x + d.y * d.y)
    t = min(max(t, Fraction(0)), Fraction(1))
    return Point(s.p.x + t * d.x, s.p.y + t * d.y)


def _sq(p: Point, q: Point) -> Fraction:
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


def closest_pair(h1: Sequence[Point], h2: Sequence[Point]) -> tuple[Point, Point]:
    """A closest pair of points between two disjoint closed hulls (exact)."""
    best: tuple[Fraction, Point, Point] | None = None

    def consider(p: Point, q: Point) -> None:
        nonlocal best
        d = _sq(p, q)
        if best is None or d < best[0]:
            best = (d, p, q)

    for p in h1:
        for q in h2:
            consider(p, q)
        for e in hull_edges(h2):
            consider(p, _closest_on_segment(p, e))
    for q in h2:
        for e in hull_edges(h1):
            consider(_closest_on_segment(q, e), q)
    assert best is not None
    return best[1], best[2]


def separating_halfplane(pts1: Iterable[Point], pts2: Iterable[Point]) -> Halfplane | None:
    """An open halfplane containing ``pts1`` and missing ``pts2`` entirely.

    The boundary is the perpendicular bisector of a closest pair.  Returns
    None when either set is empty; raises ValueError when the hulls meet.
    """
    h1, h2 = convex_hull(pts1), convex_hull(pts2)
    if not h1 or not h2:
        return None
    if hulls_intersect(h1, h2):
        raise ValueError("hulls intersect; no strict separator")
    p, q = closest_pair(h1, h2)
    n = Point(q.x - p.x, q.y - p.y)
    m = midpoint(p, q)
    return Halfplane.open(n.x, n.y, n.x * m.x + n.y * m.y)
