"""Line arrangements and the capacity function mu.

``mu_A(S)`` is the size of the largest subset of lines of ``A`` whose pairwise
intersections all lie in ``S``.  For a single halfplane it is computed in
``O(n log n)`` by a reduction to a longest monotone subsequence; for finite
unions of halfplanes a brute-force subset search serves as the oracle.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import InvariantViolation, ParallelPair, SizeLimitExceeded
from .geometry import GeneralLine, Halfplane, InterceptLine, Parallel, Point, line_intersection

BRUTEFORCE_LIMIT = 14


class Arrangement:
    """A finite sequence of pairwise non-parallel lines; index is identity.

    All ``n(n-1)/2`` vertices are computed at construction.
    """

    __slots__ = ("lines", "_vertices", "_int_lines")

    def __init__(self, lines: Iterable[Union[GeneralLine, InterceptLine]]):
        ls = tuple(l.to_general() if isinstance(l, InterceptLine) else l for l in lines)
        if not ls:
            raise ValueError("an arrangement needs at least one line")
        verts: dict[tuple[int, int], Point] = {}
        for i, j in combinations(range(len(ls)), 2):
            p = line_intersection(ls[i], ls[j])
            if isinstance(p, Parallel):
                raise ParallelPair(f"lines {i} and {j} are parallel ({p.value}): {ls[i]} / {ls[j]}")
            verts[(i, j)] = p
        self.lines = ls
        self._vertices = verts
        self._int_lines = tuple(l.integer_coefficients() for l in ls)

    def __len__(self) -> int:
        return len(self.lines)

    def __repr__(self) -> str:
        return f"Arrangement(n={len(self.lines)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Arrangement) and self.lines == other.lines

    def __hash__(self) -> int:
        return hash(self.lines)

    @property
    def vertex_map(self) -> Mapping[tuple[int, int], Point]:
        return self._vertices

    def vertex(self, i: int, j: int) -> Point:
        return self._vertices[(i, j) if i < j else (j, i)]

    def points(self) -> list[Point]:
        """Distinct vertices, sorted."""
        return sorted(set(self._vertices.values()))

    def restrict(self, indices: Iterable[int]) -> "Arrangement":
        return Arrangement(self.lines[i] for i in indices)

    def translated(self, dx: Fraction, dy: Fraction) -> "Arrangement":
        return Arrangement(GeneralLine(l.a, l.b, l.c + l.a * dx + l.b * dy) for l in self.lines)

    def scaled(self, factor: Fraction) -> "Arrangement":
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return Arrangement(GeneralLine(l.a, l.b, l.c * factor) for l in self.lines)

    def max_concurrency(self) -> int:
        """Largest number of lines through a common point (1 if no vertex is shared)."""
        through: dict[Point, set[int]] = {}
        for (i, j), p in self._vertices.items():
            through.setdefault(p, set()).update((i, j))
        return max((len(s) for s in through.values()), default=1)


def vertices(A: Arrangement) -> Mapping[tuple[int, int], Point]:
    return A.vertex_map


@dataclass(frozen=True)
class MuResult:
    value: int
    witness: tuple[int, ...]


# ---------------------------------------------------------------------------
# Monotone subsequences
# ---------------------------------------------------------------------------


class Direction(enum.Enum):
    INCREASING = "increasing"
    NON_DECREASING = "non-decreasing"
    DECREASING = "decreasing"
    NON_INCREASING = "non-increasing"


def monotone_subsequence(seq: Sequence, direction: Direction) -> tuple[int, tuple[int, ...]]:
    """Longest monotone subsequence by patience sorting.

    Returns ``(length, indices)`` with strictly increasing indices.
    """
    if direction in (Direction.DECREASING, Direction.NON_INCREASING):
        keys = [-v for v in seq]
    else:
        keys = list(seq)
    strict = direction in (Direction.INCREASING, Direction.DECREASING)
    place = bisect_left if strict else bisect_right

    tails: list = []  # smallest tail key of a run of each length
    tail_idx: list[int] = []
    parent = [-1] * len(keys)
    for i, k in enumerate(keys):
        pos = place(tails, k)
        if pos == len(tails):
            tails.append(k)
            tail_idx.append(i)
        else:
            tails[pos] = k
            tail_idx[pos] = i
        parent[i] = tail_idx[pos - 1] if pos > 0 else -1

    out: list[int] = []
    i = tail_idx[-1] if tail_idx else -1
    while i != -1:
        out.append(i)
        i = parent[i]
    return len(out), tuple(reversed(out))


# ---------------------------------------------------------------------------
# mu over one halfplane
# ---------------------------------------------------------------------------


def _halfplane_ints(h: Halfplane) -> tuple[int, int, int]:
    m = lcm(h.a.denominator, h.b.denominator, h.c.denominator)
    return int(h.a * m), int(h.b * m), int(h.c * m)


def mu_halfplane(A: Arrangement, h: Halfplane) -> MuResult:
    """Exact ``mu_A(h)`` through the monotone-subsequence reduction.

    Use frame coordinates ``w = a*x + b*y - c`` (inside is ``w < 0`` or
    ``w <= 0``) and ``u = -b*x + a*y`` along the boundary.  A line not
    parallel to the boundary reads ``u = m*w + u0``; two such lines with
    ``m_i < m_j`` meet at ``w = (u0_j - u0_i) / (m_i - m_j)``, which is inside
    exactly when ``u0_i < u0_j`` (open) or ``u0_i <= u0_j`` (closed).
    """
    a, b, c = _halfplane_ints(h)
    norm = a * a + b * b
    entries: list[tuple[Fraction, Fraction, int]] = []
    parallel: list[tuple[int, bool]] = []
    for idx, (al, be, ga) in enumerate(A._int_lines):
        along = al * a + be * b
        den = be * a - al * b
        if den == 0:
            # constant w on this line: every vertex it has sits at that offset
            lam_num, lam_den = (al, a) if a != 0 else (be, b)
            w = Fraction(ga * lam_den, lam_num) - c
            parallel.append((idx, w < 0 if h.strict else w <= 0))
            continue
        slope = Fraction(-along, den)
        offset = Fraction(ga * norm - along * c, den)
        entries.append((slope, offset, idx))

    if len(parallel) > 1:
        raise InvariantViolation("more than one line parallel to the boundary")
    entries.sort()
    for (s1, _, i1), (s2, _, i2) in zip(entries, entries[1:]):
        if s1 == s2:
            raise InvariantViolation(f"lines {i1} and {i2} share a frame slope")

    length, picks = monotone_subsequence(
        [e[1] for e in entries],
        Direction.INCREASING if h.strict else Direction.NON_DECREASING,
    )
    witness = [entries[k][2] for k in picks]
    if parallel:
        idx, joins = parallel[0]
        if joins:
            witness.append(idx)
        elif not witness:
            witness = [idx]
    return MuResult(len(witness), tuple(sorted(witness)))


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------


def mu_bruteforce(
    A: Arrangement,
    inside: Callable[[Point], bool],
    limit: int = BRUTEFORCE_LIMIT,
) -> MuResult:
    """Largest subset of lines whose pairwise vertices all satisfy ``inside``.

    Enumerates subsets from largest to smallest; independent of the
    monotone-subsequence reduction.
    """
    n = len(A)
    if n > limit:
        raise SizeLimitExceeded(f"brute force limited to {limit} lines, got {n}")
    ok = {pair: inside(p) for pair, p in A.vertex_map.items()}
    for size in range(n, 1, -1):
        for subset in combinations(range(n), size):
            if all(ok[pair] for pair in combinations(subset, 2)):
                return MuResult(size, subset)
    return MuResult(1, (0,))


def mu_region_bruteforce(
    A: Arrangement,
    region: Sequence[Halfplane],
    limit: int = BRUTEFORCE_LIMIT,
) -> MuResult:
    """``mu_A`` of the union of the given halfplanes, by subset enumeration."""
    region = tuple(region)
    return mu_bruteforce(A, lambda p: any(h.contains(p) for h in region), limit=limit)


def witness_is_valid(A: Arrangement, witness: Iterable[int], inside: Callable[[Point], bool]) -> bool:
    """Re-check that every pairwise vertex of ``witness`` satisfies ``inside``."""
    return all(inside(A.vertex(i, j)) for i, j in combinations(sorted(witness), 2))
