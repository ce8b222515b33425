"""Ham-sandwich cuts, halfspace depth, same-type subsets and the pencil
constructions that show the square-root bounds are tight.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import isqrt
from typing import Iterator, Optional, Sequence

from .errors import (
    InfeasibleScale,
    InvariantViolation,
    SearchExhausted,
    SizeLimitExceeded,
    TargetUnreachable,
)
from .geometry import (
    GeneralLine,
    Halfplane,
    Point,
    convex_hull,
    cross,
    in_convex_position,
    line_intersection,
    line_meets_hull,
    midpoint,
    separating_halfplane,
    strictly_separable,
)
from .mu import Arrangement, MuResult, mu_bruteforce, mu_halfplane

CENTERPOINT_LIMIT = 12


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def centerpoint_bound(n: int) -> int:
    """Smallest integer t with t*t >= n/3."""
    t = isqrt(n // 3)
    while 3 * t * t < n:
        t += 1
    return t


def closed_sides(line: GeneralLine) -> tuple[Halfplane, Halfplane]:
    """The closed halfplanes ``a*x+b*y >= c`` (plus) and ``<= c`` (minus)."""
    return (
        Halfplane.closed(-line.a, -line.b, -line.c),
        Halfplane.closed(line.a, line.b, line.c),
    )


# ---------------------------------------------------------------------------
# Ham-sandwich cuts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CutResult:
    cut: GeneralLine
    # witnesses[i][0] is the "+" side (a*x+b*y >= c), witnesses[i][1] the "-" side
    witnesses: tuple[tuple[MuResult, MuResult], tuple[MuResult, MuResult]]

    @property
    def values(self) -> tuple[int, int, int, int]:
        (p1, m1), (p2, m2) = self.witnesses
        return (p1.value, m1.value, p2.value, m2.value)

    @property
    def min_value(self) -> int:
        return min(self.values)

    def halfplanes(self) -> tuple[Halfplane, Halfplane]:
        return closed_sides(self.cut)


def cut_candidates(points: Sequence[Point]) -> list[GeneralLine]:
    """Distinct lines through pairs of distinct points, in canonical order."""
    pts = sorted(set(points))
    lines = {GeneralLine.through(p, q) for p, q in combinations(pts, 2)}
    return sorted(lines, key=GeneralLine.key)


def evaluate_cut(A1: Arrangement, A2: Arrangement, line: GeneralLine) -> CutResult:
    plus, minus = closed_sides(line)
    return CutResult(
        line,
        (
            (mu_halfplane(A1, plus), mu_halfplane(A1, minus)),
            (mu_halfplane(A2, plus), mu_halfplane(A2, minus)),
        ),
    )


def _trivial_cut(A1: Arrangement, A2: Arrangement) -> CutResult:
    pts = sorted(set(A1.points()) | set(A2.points()))
    line = GeneralLine.vertical(pts[0].x) if pts else GeneralLine.vertical(0)
    return evaluate_cut(A1, A2, line)


def ham_sandwich_cut(A1: Arrangement, A2: Arrangement) -> CutResult:
    """A line whose closed sides each hold ``ceil(sqrt(|A_i|))`` lines of both
    arrangements pairwise meeting on that side.

    Searches every line through two vertices of ``A1`` or ``A2``; any cut
    can be translated and then rotated onto such a line without a vertex
    leaving either closed side.  Candidates are ranked first by the worst
    per-arrangement ratio to its target, then by the smallest of the four
    values; ties go to the first line in canonical order.
    """
    pts = sorted(set(A1.points()) | set(A2.points()))
    if len(pts) < 2:
        return _trivial_cut(A1, A2)
    t1, t2 = ceil_sqrt(len(A1)), ceil_sqrt(len(A2))
    best: Optional[CutResult] = None
    best_key: tuple[Fraction, int] = (Fraction(-1), -1)
    for line in cut_candidates(pts):
        plus, minus = closed_sides(line)
        vals: list[MuResult] = []
        ratio = None
        for A, t in ((A1, t1), (A2, t2)):
            for h in (plus, minus):
                r = mu_halfplane(A, h)
                vals.append(r)
                q = Fraction(r.value, t)
                ratio = q if ratio is None or q < ratio else ratio
                if ratio < best_key[0]:
                    break
            if ratio < best_key[0]:
                break
        if ratio < best_key[0] or len(vals) < 4:
            continue
        key = (ratio, min(r.value for r in vals))
        if key > best_key:
            best_key = key
            best = CutResult(line, ((vals[0], vals[1]), (vals[2], vals[3])))
    assert best is not None
    return best


def best_cut_value(A1: Arrangement, A2: Arrangement) -> tuple[int, GeneralLine]:
    """Exhaustive maximum over all candidate cuts of the smallest of the four values."""
    pts = sorted(set(A1.points()) | set(A2.points()))
    if len(pts) < 2:
        r = _trivial_cut(A1, A2)
        return r.min_value, r.cut
    best_val, best_line = -1, None
    for line in cut_candidates(pts):
        v = evaluate_cut(A1, A2, line).min_value
        if v > best_val:
            best_val, best_line = v, line
    assert best_line is not None
    return best_val, best_line


# ---------------------------------------------------------------------------
# Halfspace depth and centerpoints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DepthCertificate:
    point: Point
    depth: int
    line: GeneralLine
    halfplane: Halfplane
    witness: tuple[int, ...]


def _upper(d: Point) -> Point:
    if d.y < 0 or (d.y == 0 and d.x < 0):
        return Point(-d.x, -d.y)
    return d


def _angle_key(d: Point) -> tuple[int, Fraction]:
    # d in the upper half-turn [0, pi); increasing in angle
    return (0, Fraction(0)) if d.y == 0 else (1, -d.x / d.y)


def generic_directions(q: Point, pts: Sequence[Point]) -> list[Point]:
    """One direction strictly inside each angular gap between the lines from
    ``q`` to the points of ``pts``; each result avoids all of them."""
    dirs: dict[tuple[int, Fraction], Point] = {}
    for v in pts:
        if v == q:
            continue
        d = _upper(Point(v.x - q.x, v.y - q.y))
        dirs.setdefault(_angle_key(d), d)
    ds = [dirs[k] for k in sorted(dirs)]
    if not ds:
        return [Point(Fraction(1), Fraction(0))]
    if len(ds) == 1:
        return [Point(-ds[0].y, ds[0].x)]
    out = [Point(u.x + v.x, u.y + v.y) for u, v in zip(ds, ds[1:])]
    out.append(Point(ds[-1].x - ds[0].x, ds[-1].y - ds[0].y))
    return out


def depth(A: Arrangement, q: Point) -> DepthCertificate:
    """Halfspace depth of ``q``: the least mu over closed halfplanes whose
    boundary passes through ``q``.

    Only boundaries avoiding every vertex other than ``q`` need checking; a
    boundary through another vertex gives a superset of a neighbouring
    generic one.
    """
    best: Optional[DepthCertificate] = None
    for d in generic_directions(q, A.points()):
        line = GeneralLine(-d.y, d.x, -d.y * q.x + d.x * q.y)
        for h in closed_sides(line):
            r = mu_halfplane(A, h)
            if best is None or r.value < best.depth:
                best = DepthCertificate(q, r.value, line, h, r.witness)
    assert best is not None
    return best


def depth_bruteforce(A: Arrangement, q: Point, limit: int = 14) -> int:
    """Independent depth oracle.

    For every line through ``q`` and a vertex, form the four vertex sets seen
    by boundaries rotated infinitesimally either way, and evaluate mu on each
    by subset enumeration.
    """
    pts = A.points()
    at_q = {p for p in pts if p == q}
    critical = []
    for v in pts:
        if v != q:
            critical.append(Point(v.x - q.x, v.y - q.y))
    if not critical:
        return mu_bruteforce(A, lambda p: p in at_q, limit=limit).value

    best = len(A)
    for d in critical:
        left, right, fwd, back = set(), set(), set(), set()
        for p in pts:
            rel = Point(p.x - q.x, p.y - q.y)
            c = cross(d, rel)
            if c > 0:
                left.add(p)
            elif c < 0:
                right.add(p)
            else:
                dot = d.x * rel.x + d.y * rel.y
                if dot > 0:
                    fwd.add(p)
                elif dot < 0:
                    back.add(p)
        for region in (
            left | back | at_q,
            right | fwd | at_q,
            left | fwd | at_q,
            right | back | at_q,
        ):
            best = min(best, mu_bruteforce(A, region.__contains__, limit=limit).value)
    return best


def _centerpoint_candidates(A: Arrangement) -> Iterator[Point]:
    pts = A.points()
    seen: set[Point] = set()
    for p in pts:
        seen.add(p)
        yield p
    lines = cut_candidates(pts)
    crossings: list[Point] = []
    for l1, l2 in combinations(lines, 2):
        p = line_intersection(l1, l2)
        if isinstance(p, Point) and p not in seen:
            seen.add(p)
            crossings.append(p)
            yield p
    for p, r in combinations(crossings, 2):
        m = midpoint(p, r)
        if m not in seen:
            seen.add(m)
            yield m


def centerpoint(A: Arrangement, limit: int = CENTERPOINT_LIMIT) -> DepthCertificate:
    """A point of depth at least ``ceil(sqrt(|A|/3))``.

    Candidates are arrangement vertices, then crossings of vertex-pair
    lines, then midpoints of those crossings; the first one meeting the
    bound is returned.
    """
    if len(A) > limit:
        raise SizeLimitExceeded(f"centerpoint search limited to {limit} lines, got {len(A)}")
    target = centerpoint_bound(len(A))
    if not A.points():
        # a single line: every halfplane holds it vacuously
        q = Point(Fraction(0), Fraction(0))
        return depth(A, q)
    for q in _centerpoint_candidates(A):
        cert = depth(A, q)
        if cert.depth >= target:
            return cert
    raise SearchExhausted(f"no candidate reached depth {target}")


# ---------------------------------------------------------------------------
# Tightness construction
# ---------------------------------------------------------------------------


def _pencil_slopes(k: int) -> list[list[Fraction]]:
    out = []
    for i in range(1, k + 1):
        hi = Fraction(1, 2) - Fraction(i - 1, k)
        lo = Fraction(1, 2) - Fraction(i, k)
        out.append([lo + (hi - lo) * j / (k + 1) for j in range(1, k + 1)])
    return out


def _pencil_lines(centers: Sequence[Point], slopes: Sequence[Sequence[Fraction]]) -> list[GeneralLine]:
    lines = []
    for c, ms in zip(centers, slopes):
        for m in ms:
            # y - cy = m (x - cx)
            lines.append(GeneralLine(m, -1, m * c.x - c.y))
    return lines


def _pencil_ok(A: Arrangement, centers: Sequence[Point], distinct_x: bool) -> bool:
    cs = set(centers)
    pts = A.points()
    if any(p.x <= Fraction(1, 2) for p in pts if p not in cs):
        return False
    if distinct_x:
        xs = [p.x for p in pts]
        return len(set(xs)) == len(xs)
    return True


def pencil_arrangement(k: int, seed: Optional[int] = None) -> Arrangement:
    """``k`` pencils of ``k`` lines, centred at ``(-1/2, i)``.

    Pencil ``i`` gets ``k`` equally spaced slopes strictly inside
    ``[1/2 - i/k, 1/2 - (i-1)/k]``, so every non-centre vertex has
    ``x > 1/2``.  With a seed, slopes and centre abscissae are nudged by
    distinct tiny rationals until all vertices have distinct x.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    slopes = _pencil_slopes(k)
    centers = [Point(Fraction(-1, 2), Fraction(i)) for i in range(1, k + 1)]
    if seed is None:
        A = Arrangement(_pencil_lines(centers, slopes))
        if not _pencil_ok(A, centers, distinct_x=False):
            raise InvariantViolation("pencil construction put a vertex left of x = 1/2")
        return A

    rng = random.Random(seed)
    spacing = Fraction(1, k * (k + 1))
    for _ in range(100):
        unit = spacing / (100 * k * k)
        bumps = rng.sample(range(1, 10 * k * k + 1), k * k)
        shifted = [
            [m + unit * bumps[i * k + j] / (10 * k * k) for j, m in enumerate(ms)]
            for i, ms in enumerate(slopes)
        ]
        xs = rng.sample(range(1, 10 * k + 1), k)
        moved = [Point(c.x + Fraction(x, 1000 * k * k), c.y) for c, x in zip(centers, xs)]
        try:
            A = Arrangement(_pencil_lines(moved, shifted))
        except ValueError:
            continue
        if _pencil_ok(A, moved, distinct_x=True):
            return A
    raise InvariantViolation("could not perturb the pencil construction")


def _misses_hull_all(pts: Sequence[Point], hull: Sequence[Point]) -> bool:
    return not any(line_meets_hull(GeneralLine.through(p, q), hull) for p, q in combinations(pts, 2))


def pencil_pair(k: int, seed: int = 0) -> tuple[Arrangement, Arrangement]:
    """A perturbed pencil arrangement and a copy shifted down far enough that
    no line through two vertices of either meets the hull of the other."""
    A1 = pencil_arrangement(k, seed=seed)
    p1 = A1.points()
    h1 = convex_hull(p1)
    shift = Fraction(1)
    while True:
        A2 = A1.translated(Fraction(0), -shift)
        p2 = A2.points()
        if _misses_hull_all(p1, convex_hull(p2)) and _misses_hull_all(p2, h1):
            return A1, A2
        shift *= 2


# ---------------------------------------------------------------------------
# Same-type subsets
# ---------------------------------------------------------------------------

SPLITS: tuple[frozenset[int], ...] = (frozenset({0}), frozenset({1}), frozenset({2}))


def _vertex_points(A: Arrangement, idx: Sequence[int]) -> list[Point]:
    return [A.vertex(i, j) for i, j in combinations(sorted(idx), 2)]


def common_transversal_exists(hulls: Sequence[Sequence[Point]]) -> Optional[GeneralLine]:
    """A line meeting every closed hull, or None.

    If some transversal exists, one passes through two hull vertices, so
    only lines through vertex pairs are tried.  An empty hull cannot be met.
    """
    if any(not h for h in hulls):
        return None
    pts = sorted({p for h in hulls for p in h})
    if len(pts) == 1:
        return GeneralLine.vertical(pts[0].x)
    for line in cut_candidates(pts):
        if all(line_meets_hull(line, h) for h in hulls):
            return line
    return None


def well_separated(point_sets: Sequence[Sequence[Point]]) -> bool:
    """Every split of the sets into two groups is strictly line-separable."""
    m = len(point_sets)
    for r in range(1, m // 2 + 1):
        for group in combinations(range(m), r):
            left = [p for i in group for p in point_sets[i]]
            right = [p for i in range(m) if i not in group for p in point_sets[i]]
            if not strictly_separable(left, right):
                return False
    return True


@dataclass(frozen=True)
class SameTypeResult:
    subsets: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    rounds: int
    # split (the group holding the third set) -> open halfplane holding that group
    separators: dict = field(default_factory=dict)

    def hulls(self, arrs: Sequence[Arrangement]) -> list[list[Point]]:
        return [convex_hull(_vertex_points(A, s)) for A, s in zip(arrs, self.subsets)]


def _split_groups(split: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    rest = frozenset({0, 1, 2}) - split
    return (split, rest) if 2 in split else (rest, split)


def _split_ok(arrs, subsets, split) -> bool:
    g, rest = _split_groups(split)
    left = [p for i in g for p in _vertex_points(arrs[i], subsets[i])]
    right = [p for i in rest for p in _vertex_points(arrs[i], subsets[i])]
    return strictly_separable(left, right)


def _shrink_for_split(arrs, subsets, split, target):
    """Cut the first two sets, send the third to its richer side, and keep
    the witness on the side given by the split.  Among all candidate cuts,
    keep the one with the largest smallest subset that actually separates
    the split strictly."""
    sub = [A.restrict(s) for A, s in zip(arrs, subsets)]
    group, _ = _split_groups(split)
    pts = sorted(set(sub[0].points()) | set(sub[1].points()))
    lines = cut_candidates(pts) if len(pts) >= 2 else [_trivial_cut(sub[0], sub[1]).cut]

    best_score, best = -1, None
    for line in lines:
        plus, minus = closed_sides(line)
        r3p, r3m = mu_halfplane(sub[2], plus), mu_halfplane(sub[2], minus)
        if r3p.value >= r3m.value:
            good, bad, r3 = plus, minus, r3p
        else:
            good, bad, r3 = minus, plus, r3m
        if r3.value < target or r3.value <= best_score:
            continue
        picks = []
        for i in (0, 1):
            r = mu_halfplane(sub[i], good if i in group else bad)
            picks.append(r)
            if r.value < target or r.value <= best_score:
                break
        else:
            picks.append(r3)
            chosen = [tuple(sorted(subsets[i][j] for j in picks[i].witness)) for i in range(3)]
            if _split_ok(arrs, chosen, split):
                best_score, best = min(r.value for r in picks), chosen
    if best is None:
        raise TargetUnreachable(f"no cut keeps {target} lines per set while separating {sorted(split)}")
    return best


def same_type_triple(
    A1: Arrangement,
    A2: Arrangement,
    A3: Arrangement,
    target: int,
    max_rounds: int = 4,
) -> SameTypeResult:
    """Shrink three arrangements until their vertex hulls are well separated.

    While some split of the three hulls is not strictly line-separable,
    apply a ham-sandwich cut to the first two and keep the sides dictated by
    the split.  Every split is handled at most once, since shrinking keeps
    earlier separations.
    """
    arrs = (A1, A2, A3)
    subsets = [tuple(range(len(A))) for A in arrs]
    if any(len(s) < target for s in subsets):
        raise TargetUnreachable("an input is already smaller than the target")
    rounds = 0
    while True:
        pending = [s for s in SPLITS if not _split_ok(arrs, subsets, s)]
        if not pending:
            break
        if rounds >= max_rounds:
            raise InvariantViolation(f"same-type loop exceeded {max_rounds} rounds")
        subsets = _shrink_for_split(arrs, subsets, pending[0], target)
        rounds += 1

    pts = [_vertex_points(A, s) for A, s in zip(arrs, subsets)]
    hulls = [convex_hull(p) for p in pts]
    if common_transversal_exists(hulls) is not None or not well_separated(pts):
        raise InvariantViolation("same-type result is not well separated")
    separators = {}
    for split in SPLITS:
        group, rest = _split_groups(split)
        separators[split] = separating_halfplane(
            [p for i in group for p in pts[i]], [p for i in rest for p in pts[i]]
        )
    return SameTypeResult((subsets[0], subsets[1], subsets[2]), rounds, separators)


# ---------------------------------------------------------------------------
# Convex position
# ---------------------------------------------------------------------------


def convex_position_points(pts: Sequence[Point], k: int) -> Optional[tuple[int, ...]]:
    """Indices of ``k`` points in strictly convex position, by brute force."""
    if len(pts) > 20:
        raise SizeLimitExceeded("convex_position_points handles at most 20 points")
    for idx in combinations(range(len(pts)), k):
        if in_convex_position([pts[i] for i in idx]):
            return idx
    return None


def _sample_transversals(hulls, rng: random.Random, samples: int) -> Iterator[list[Point]]:
    sizes = 1
    for h in hulls:
        sizes *= len(h)
    if sizes <= samples:
        yield from (list(t) for t in product(*hulls))
    else:
        for _ in range(samples):
            yield [rng.choice(h) for h in hulls]
    # interior points: random rational convex combinations of hull vertices
    for _ in range(samples):
        pick = []
        for h in hulls:
            w = [rng.randint(1, 20) for _ in h]
            s = sum(w)
            pick.append(
                Point(
                    sum(Fraction(wi) * p.x for wi, p in zip(w, h)) / s,
                    sum(Fraction(wi) * p.y for wi, p in zip(w, h)) / s,
                )
            )
        yield pick


def convex_position_subsets(
    A: Arrangement,
    k: int,
    c: int,
    m: int,
    seed: int = 0,
    samples: int = 200,
) -> list[tuple[int, ...]]:
    """``k`` groups of at least ``c`` lines whose vertex hulls have every
    transversal in convex position.

    ``A`` is cut into ``m`` consecutive groups, every triple of groups is
    made well separated, one vertex per group is chosen, and a convex
    ``k``-subset of those points picks the groups.  Groups keep at least two
    lines so that their hulls are nonempty.  The result is checked on sampled
    transversals before it is returned.
    """
    need = max(c, 2)
    size = len(A) // m
    if m < k or size < need:
        raise InfeasibleScale(f"{len(A)} lines cannot form {m} groups of {need}")
    groups = [tuple(range(g * size, (g + 1) * size)) for g in range(m)]

    for i, j, l in combinations(range(m), 3):
        trio = [A.restrict(groups[t]) for t in (i, j, l)]
        try:
            res = same_type_triple(*trio, target=need)
        except TargetUnreachable as exc:
            raise InfeasibleScale(str(exc)) from exc
        for t, sub in zip((i, j, l), res.subsets):
            groups[t] = tuple(groups[t][s] for s in sub)

    pts = [_vertex_points(A, g) for g in groups]
    for trio in combinations(range(m), 3):
        if not well_separated([pts[t] for t in trio]):
            raise InvariantViolation("a triple lost its separation")
    reps = [min(p) for p in pts]
    chosen = convex_position_points(reps, k)
    if chosen is None:
        raise InfeasibleScale(f"no {k} of the {m} group representatives are in convex position")

    hulls = [convex_hull(pts[t]) for t in chosen]
    rng = random.Random(seed)
    for trans in _sample_transversals(hulls, rng, samples):
        if not in_convex_position(trans):
            raise InvariantViolation("a transversal is not in convex position")
    return [groups[t] for t in chosen]
