"""Embedded triangulations, canonical orderings, frames and linear extensions.

Vertices are ``0..n-1``.  An embedding is a rotation system: for every
vertex, the cyclic order of its neighbours.  Faces are traced by the rule
"arrive at v from u, leave towards the rotation successor of u at v".
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CyclicFrame, InvalidOrder, NotTriangulation


@dataclass(frozen=True)
class EmbeddedTriangulation:
    n: int
    rotation: tuple[tuple[int, ...], ...]
    outer: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "outer", tuple(self.outer))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Sequence[int]], outer: Sequence[int]) -> "EmbeddedTriangulation":
        """Build the rotation system from consistently oriented triangles."""
        succ: list[dict[int, int]] = [dict() for _ in range(n)]
        for a, b, c in faces:
            succ[b][a] = c
            succ[c][b] = a
            succ[a][c] = b
        rotation = []
        for v in range(n):
            if not succ[v]:
                rotation.append(())
                continue
            start = min(succ[v])
            ring = [start]
            nxt = succ[v][start]
            while nxt != start:
                ring.append(nxt)
                if len(ring) > len(succ[v]):
                    raise NotTriangulation(f"faces around {v} do not close up")
                nxt = succ[v][nxt]
            rotation.append(tuple(ring))
        return cls(n, tuple(rotation), tuple(outer))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(u, v), max(u, v)) for u in range(self.n) for v in self.rotation[u]})

    def adjacency(self) -> list[set[int]]:
        return [set(r) for r in self.rotation]

    def successor(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[(r.index(u) + 1) % len(r)]

    def faces(self) -> list[tuple[int, ...]]:
        """Face boundaries traced from the rotation system."""
        seen: set[tuple[int, int]] = set()
        out = []
        for u in range(self.n):
            for v in self.rotation[u]:
                if (u, v) in seen:
                    continue
                cycle = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    cycle.append(a)
                    a, b = b, self.successor(b, a)
                    if len(cycle) > 2 * self.n * self.n:
                        break
                out.append(tuple(cycle))
        return out

    def inner_faces(self) -> list[frozenset[int]]:
        outer = frozenset(self.outer)
        fs = [frozenset(f) for f in self.faces()]
        out, dropped = [], False
        for f in fs:
            if f == outer and not dropped:
                dropped = True
                continue
            out.append(f)
        return out

    def relabel_outer(self, outer: Sequence[int]) -> "EmbeddedTriangulation":
        return EmbeddedTriangulation(self.n, self.rotation, tuple(outer))

    def mirrored(self) -> "EmbeddedTriangulation":
        return EmbeddedTriangulation(self.n, tuple(tuple(reversed(r)) for r in self.rotation), self.outer)


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def add(self, msg: str) -> None:
        self.violations.append(msg)


def validate_triangulation(g: EmbeddedTriangulation) -> ValidationReport:
    rep = ValidationReport()
    n = g.n
    if n < 3:
        rep.add(f"need at least 3 vertices, got {n}")
        return rep
    if len(g.rotation) != n:
        rep.add(f"rotation lists {len(g.rotation)} vertices, expected {n}")
        return rep
    for v, r in enumerate(g.rotation):
        if any(not (0 <= u < n) for u in r):
            rep.add(f"vertex {v} has an out-of-range neighbour")
            return rep
        if v in r:
            rep.add(f"vertex {v} has a loop")
        if len(set(r)) != len(r):
            rep.add(f"vertex {v} lists a neighbour twice")
    for v, r in enumerate(g.rotation):
        for u in r:
            if v not in g.rotation[u]:
                rep.add(f"edge {v}-{u} is not symmetric")
    if not rep.ok:
        return rep
    m = len(g.edges())
    if m != 3 * n - 6 and not (n == 3 and m == 3):
        rep.add(f"{m} edges, a triangulation on {n} vertices has {3 * n - 6}")
    fs = g.faces()
    if len(fs) != 2 * n - 4:
        rep.add(f"{len(fs)} faces, expected {2 * n - 4}")
    bad = [f for f in fs if len(f) != 3]
    if bad:
        rep.add(f"{len(bad)} faces are not triangles")
    if len(set(g.outer)) != 3 or frozenset(g.outer) not in {frozenset(f) for f in fs}:
        rep.add(f"outer triple {g.outer} is not a face")
    return rep


def _require_valid(g: EmbeddedTriangulation) -> None:
    rep = validate_triangulation(g)
    if not rep.ok:
        raise NotTriangulation("; ".join(rep.violations) + " (triangulate the input first)")


# ---------------------------------------------------------------------------
# Canonical ordering
# ---------------------------------------------------------------------------


def canonical_ordering(g: EmbeddedTriangulation) -> tuple[int, ...]:
    """A canonical ordering by peeling the outer cycle.

    Repeatedly remove the smallest contour vertex (other than ``v1``, ``v2``)
    that has no chord; its inner neighbours take its place on the contour.
    """
    _require_valid(g)
    v1, v2, vn = g.outer
    if g.n == 3:
        return (v1, v2, vn)

    rot = g.rotation
    # interior side: the rotation direction from v1 to v2 at vn that is not
    # the empty outer corner
    r = rot[vn]
    i1, i2 = r.index(v1), r.index(v2)
    step = 1 if (i2 - i1) % len(r) != 1 else -1

    removed: set[int] = set()
    contour = [v1, vn, v2]
    peeled = []
    adj = g.adjacency()
    for _ in range(g.n - 2):
        on = set(contour)
        pick = None
        for j in range(1, len(contour) - 1):
            c = contour[j]
            live = {u for u in adj[c] if u not in removed and u in on}
            if live <= {contour[j - 1], contour[j + 1]} and (pick is None or c < contour[pick]):
                pick = j
        if pick is None:
            raise NotTriangulation("no removable contour vertex; embedding is inconsistent")
        c, left, right = contour[pick], contour[pick - 1], contour[pick + 1]
        rc = rot[c]
        k = rc.index(left)
        inner = []
        while True:
            k = (k + step) % len(rc)
            u = rc[k]
            if u == right:
                break
            if u in removed or u in on:
                raise NotTriangulation(f"rotation at {c} is inconsistent with the outer face")
            inner.append(u)
        contour = contour[:pick] + inner + contour[pick + 1 :]
        removed.add(c)
        peeled.append(c)
    if contour != [v1, v2]:
        raise NotTriangulation("peeling did not end at the base edge")
    return (v1, v2) + tuple(reversed(peeled))


def _connected_without(adj: Sequence[set[int]], verts: set[int], drop: set[int]) -> bool:
    live = verts - drop
    if not live:
        return True
    start = next(iter(live))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in live and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == live


def _boundary_cycle(edges: set[tuple[int, int]], start: int) -> list[int] | None:
    nbr: dict[int, list[int]] = {}
    for u, v in edges:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    if start not in nbr or any(len(x) != 2 for x in nbr.values()):
        return None
    cyc = [start]
    prev, cur = None, start
    while True:
        a, b = nbr[cur]
        nxt = a if a != prev else b
        if nxt == start:
            break
        cyc.append(nxt)
        prev, cur = cur, nxt
        if len(cyc) > len(nbr):
            return None
    return cyc if len(cyc) == len(nbr) else None


def _path_v1_v2(cycle: list[int], v1: int, v2: int) -> list[int]:
    """The path from v1 to v2 along the cycle that avoids the edge v1v2."""
    i = cycle.index(v1)
    rot = cycle[i:] + cycle[:i]
    if rot[1] == v2:
        rot = [rot[0]] + rot[1:][::-1]
    return rot


def check_canonical(g: EmbeddedTriangulation, order: Sequence[int]) -> ValidationReport:
    """Re-derive every contour C_i from the faces and check CO1 to CO4."""
    rep = ValidationReport()
    n = g.n
    if sorted(order) != list(range(n)):
        rep.add("ordering is not a permutation of the vertices")
        return rep
    v1, v2, vn = order[0], order[1], order[-1]
    if {v1, v2, vn} != set(g.outer):
        rep.add("CO1: v1, v2, vn are not the outer face")
    adj = g.adjacency()
    if v2 not in adj[v1]:
        rep.add("v1v2 is not an edge")
        return rep
    inner = g.inner_faces()
    prev_path = [v1, v2]
    for i in range(3, n + 1):
        vi = order[i - 1]
        Vi = set(order[:i])
        count: dict[tuple[int, int], int] = {}
        for u in Vi:
            for w in adj[u]:
                if w in Vi and u < w:
                    count[(u, w)] = 0
        for f in inner:
            if f <= Vi:
                a, b, c = sorted(f)
                for e in ((a, b), (a, c), (b, c)):
                    count[e] += 1
        if any(v == 0 for v in count.values()):
            rep.add(f"CO2: G_{i} has an edge on no inner face")
            return rep
        boundary = {e for e, v in count.items() if v == 1}
        cycle = _boundary_cycle(boundary, v1)
        if cycle is None or (min(v1, v2), max(v1, v2)) not in boundary:
            rep.add(f"CO2: C_{i} is not a cycle through v1v2")
            return rep
        on_cycle = set(cycle)
        if vi not in on_cycle:
            rep.add(f"CO4: v_{i} is not on C_{i}")
        # CO3: biconnected and internally 3-connected
        for x in Vi:
            if not _connected_without(adj, Vi, {x}):
                rep.add(f"CO3: G_{i} is not biconnected")
                return rep
        interior = Vi - on_cycle
        for x in interior:
            for y in Vi - {x}:
                if not _connected_without(adj, Vi, {x, y}):
                    rep.add(f"CO3: G_{i} is not internally 3-connected")
                    return rep
        # CO4: neighbours among earlier vertices are consecutive on C_{i-1}
        nb = [k for k, u in enumerate(prev_path) if u in adj[vi]]
        earlier = adj[vi] & set(order[: i - 1])
        if len(nb) < 2:
            rep.add(f"CO4: v_{i} has fewer than two neighbours on C_{i - 1}")
        elif nb != list(range(nb[0], nb[-1] + 1)) or len(nb) != len(earlier):
            rep.add(f"CO4: neighbours of v_{i} are not consecutive on C_{i - 1}")
        prev_path = _path_v1_v2(cycle, v1, v2)
    return rep


# ---------------------------------------------------------------------------
# Frames
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Frame:
    n: int
    edges: tuple[tuple[int, int], ...]

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
        return out

    def predecessors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[v].append(u)
        return out

    def sources(self) -> list[int]:
        pred = self.predecessors()
        return [v for v in range(self.n) if not pred[v]]

    def sinks(self) -> list[int]:
        succ = self.successors()
        return [v for v in range(self.n) if not succ[v]]

    def is_acyclic(self) -> bool:
        try:
            linear_extension(self)
        except CyclicFrame:
            return False
        return True


def frame(g: EmbeddedTriangulation, order: Sequence[int]) -> Frame:
    """Orient ``v1 -> v2`` and, for each later ``v_i``, ``p -> v_i -> p'``
    where ``p``, ``p'`` are its first and last neighbours on the contour."""
    adj = g.adjacency()
    v1, v2 = order[0], order[1]
    if v2 not in adj[v1]:
        raise InvalidOrder("v1v2 is not an edge")
    contour = [v1, v2]
    edges = [(v1, v2)]
    placed = {v1, v2}
    for i, v in enumerate(order[2:], start=3):
        hits = [k for k, u in enumerate(contour) if u in adj[v]]
        earlier = adj[v] & placed
        if len(hits) < 2 or hits != list(range(hits[0], hits[-1] + 1)) or len(hits) != len(earlier):
            raise InvalidOrder(f"v_{i} = {v} does not attach to a contiguous stretch of the contour")
        p, q = contour[hits[0]], contour[hits[-1]]
        edges.append((p, v))
        edges.append((v, q))
        contour = contour[: hits[0] + 1] + [v] + contour[hits[-1] :]
        placed.add(v)
    f = Frame(g.n, tuple(edges))
    if f.sources() != [v1] or f.sinks() != [v2]:
        raise InvalidOrder("frame must have the unique source v1 and sink v2")
    return f


def linear_extension(f: Frame) -> tuple[int, ...]:
    """Lexicographically smallest topological order of the frame."""
    indeg = [len(p) for p in f.predecessors()]
    succ = f.successors()
    heap = [v for v in range(f.n) if indeg[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(out) != f.n:
        raise CyclicFrame("frame has a directed cycle")
    return tuple(out)


# ---------------------------------------------------------------------------
# Small fixtures and generators
# ---------------------------------------------------------------------------


def triangle() -> EmbeddedTriangulation:
    return EmbeddedTriangulation.from_faces(3, [(0, 1, 2), (1, 0, 2)], (0, 1, 2))


def k4(outer: Sequence[int] = (0, 1, 3)) -> EmbeddedTriangulation:
    faces = [(0, 1, 2), (1, 0, 3), (2, 1, 3), (0, 2, 3)]
    return EmbeddedTriangulation.from_faces(4, faces, outer)


def octahedron(outer: Sequence[int] = (0, 1, 2)) -> EmbeddedTriangulation:
    faces = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
        (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4),
    ]
    return EmbeddedTriangulation.from_faces(6, faces, outer)


def oriented_faces(g: EmbeddedTriangulation) -> list[tuple[int, int, int]]:
    return [tuple(f) for f in g.faces()]  # type: ignore[misc]


def vertex_split(g: EmbeddedTriangulation, v: int, a: int, b: int) -> EmbeddedTriangulation:
    """Split ``v`` along its neighbours ``a`` and ``b``.

    The new vertex ``n`` takes the neighbours of ``v`` from ``b`` round to
    ``a``; both ``a`` and ``b`` end up adjacent to ``v`` and ``n``.
    """
    r = g.rotation[v]
    if a == b or a not in r or b not in r:
        raise ValueError("a and b must be distinct neighbours of v")
    w = g.n
    i, j = r.index(a), r.index(b)
    moved = set()
    t = j
    while t != i:
        moved.add((r[t], r[(t + 1) % len(r)]))
        t = (t + 1) % len(r)
    faces = []
    for f in oriented_faces(g):
        if v in f:
            k = f.index(v)
            u, x = f[k - 1], f[(k + 1) % 3]
            if (u, x) in moved:
                f = tuple(w if y == v else y for y in f)
        faces.append(f)
    faces.append((w, v, a))
    faces.append((b, v, w))
    outer = g.outer
    if v in outer and frozenset(outer) not in {frozenset(f) for f in faces}:
        outer = next(f for f in faces if w in f)
    return EmbeddedTriangulation.from_faces(g.n + 1, faces, outer)


def embedding_code(g: EmbeddedTriangulation) -> tuple[int, ...]:
    """Canonical code of the embedded graph up to relabelling and mirroring."""
    best = None
    for rot in (g.rotation, tuple(tuple(reversed(r)) for r in g.rotation)):
        for u in range(g.n):
            for v in rot[u]:
                label = {u: 0}
                order = [u]
                ref = {u: v}
                code = []
                k = 0
                while k < len(order):
                    x = order[k]
                    rx = rot[x]
                    s = rx.index(ref[x])
                    for t in range(len(rx)):
                        y = rx[(s + t) % len(rx)]
                        if y not in label:
                            label[y] = len(order)
                            order.append(y)
                            ref[y] = x
                        code.append(label[y])
                    code.append(-1)
                    k += 1
                c = tuple(code)
                if best is None or c < best:
                    best = c
    assert best is not None
    return best


def all_triangulations(n: int) -> list[EmbeddedTriangulation]:
    """One representative per triangulation on ``n`` vertices (4 <= n <= 8),
    generated by vertex splitting from K4."""
    if n < 4:
        raise ValueError("n must be at least 4")
    level = {embedding_code(k4()): k4()}
    for _ in range(n - 4):
        nxt: dict[tuple[int, ...], EmbeddedTriangulation] = {}
        for g in level.values():
            for v in range(g.n):
                r = g.rotation[v]
                for a in r:
                    for b in r:
                        if a != b:
                            h = vertex_split(g, v, a, b)
                            nxt.setdefault(embedding_code(h), h)
        level = nxt
    return [level[k] for k in sorted(level)]


def random_triangulation(n: int, rng) -> EmbeddedTriangulation:
    """Random vertex splits from K4, then a random outer face and base edge."""
    if n == 3:
        return triangle()
    g = k4()
    while g.n < n:
        v = rng.randrange(g.n)
        a, b = rng.sample(list(g.rotation[v]), 2)
        g = vertex_split(g, v, a, b)
    faces = g.faces()
    f = rng.choice(faces)
    s = rng.randrange(3)
    return g.relabel_outer(tuple(f[s:] + f[:s]))


def triangulation_instances(g: EmbeddedTriangulation) -> list[EmbeddedTriangulation]:
    """``g`` with every face as outer face and every choice of base edge."""
    out = []
    for f in g.faces():
        for s in range(3):
            out.append(g.relabel_outer(tuple(f[s:] + f[:s])))
    return out
