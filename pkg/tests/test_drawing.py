import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linecut.drawing import Drawing, draw_on_lines, falsify_support, prepare_lines, verify_drawing
from linecut.errors import ParallelLines
from linecut.generators import generic_lines, random_arrangement
from linecut.geometry import GeneralLine, InterceptLine, Point, line_intersection
from linecut.mu import Arrangement
from linecut.partition import pencil_arrangement
from linecut.planar import canonical_ordering, frame, k4, octahedron, random_triangulation, triangle


def P(x, y):
    return Point(F(x), F(y))


def slot_of(prep, line_index):
    return prep.order.index(line_index)


# -- preparation -----------------------------------------------------------


def test_prepare_two_lines():
    prep = prepare_lines([GeneralLine.from_slope_intercept(1, 0), GeneralLine(1, 1, 4)])
    # the vertex (2, 2) must end up below the axis
    assert prep.shift == 3
    assert prep.lines == (InterceptLine(-1, 1), InterceptLine(1, 3))
    assert prep.order == (1, 0)
    assert prep.a_hat == 1


def test_compliant_lines_are_left_alone():
    L = [InterceptLine(m, b).to_general() for m, b in ((-1, 0), (-3, 1), (2, 5))]
    assert all(p.y < 0 for p in Arrangement(L).points())
    prep = prepare_lines(L)
    assert (prep.transform.l1, prep.transform.l2, prep.shift) == (0, 0, 0)


def test_vertical_and_horizontal_are_sheared_away():
    L = [GeneralLine.vertical(0), GeneralLine.horizontal(2), GeneralLine(1, -1, 1)]
    prep = prepare_lines(L)
    assert all(l.slope != 0 for l in prep.lines)
    # incidence is carried over by the affine map
    v = line_intersection(L[0], L[1])
    moved = [prep.transform.map_line(l) for l in L[:2]]
    assert line_intersection(*moved) == prep.transform.forward(v)
    assert prep.transform.inverse(prep.transform.forward(v)) == v


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_prepared_invariants(seed):
    rng = random.Random(seed)
    L = list(random_arrangement(rng.randint(2, 9), rng, coef=3).lines)
    prep = prepare_lines(L)
    moved = Arrangement(prep.transform.map_line(l) for l in L)
    assert all(p.y < 0 for p in moved.points())
    b = [l.x_intercept for l in prep.lines]
    assert b == sorted(b) and len(set(b)) == len(b)
    inv = [1 / l.slope for l in prep.lines]
    assert inv == sorted(inv)


def test_parallel_lines_rejected():
    with pytest.raises(ParallelLines):
        prepare_lines([GeneralLine(1, 1, 0), GeneralLine(1, 1, 1)])


# -- the construction ------------------------------------------------------


def _check_trace(d, g):
    hs = [t.height for t in d.trace]
    assert hs[0] == 1 and all(h > 0 for h in hs)
    assert all(a > b for a, b in zip(hs, hs[1:]))
    for t in d.trace:
        assert t.y1 > 0 and t.y2 > 0
        assert 0 < t.next_height <= min(t.y1, t.y2, t.cone, t.height / 2)
    # every edge of G_{i-1} respects the slope bound chosen at step i
    order = canonical_ordering(g)
    pts = d.prepared_points
    for t in d.trace:
        earlier = set(order[: t.index - 1])
        for u, w in g.edges():
            if u in earlier and w in earlier:
                assert pts[u].x != pts[w].x
                assert abs((pts[w].y - pts[u].y) / (pts[w].x - pts[u].x)) <= t.slope


def test_triangle_on_three_lines():
    g = triangle()
    L = generic_lines(3, random.Random(1))
    d = draw_on_lines(g, L)
    prep = prepare_lines(L)
    v1, v2, v3 = canonical_ordering(g)
    pts = d.prepared_points
    assert pts[v1] == P(prep.lines[0].x_intercept, 0)
    assert pts[v2] == P(prep.lines[2].x_intercept, 0)
    assert pts[v3].y == 1 and slot_of(prep, d.assignment[v3]) == 1
    assert verify_drawing(g, L, d).ok


def test_k4_on_pencil_lines():
    L = list(pencil_arrangement(2).lines)
    d = draw_on_lines(k4(), L)
    assert verify_drawing(k4(), L, d).ok


def test_octahedron_on_random_lines():
    g = octahedron()
    L = generic_lines(6, random.Random(3))
    d = draw_on_lines(g, L)
    assert verify_drawing(g, L, d).ok
    _check_trace(d, g)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 14))
def test_random_drawings(seed, n):
    rng = random.Random(seed)
    g = random_triangulation(n, rng)
    L = list(random_arrangement(n, rng, coef=4).lines)  # small coefficients: concurrency and axis-parallel lines
    d = draw_on_lines(g, L)
    assert verify_drawing(g, L, d).ok
    _check_trace(d, g)

    prep = prepare_lines(L)
    # frame order matches the left-to-right order of the lines
    for u, w in frame(g, canonical_ordering(g)).edges:
        assert prep.lines[slot_of(prep, d.assignment[u])].x_intercept < prep.lines[slot_of(prep, d.assignment[w])].x_intercept
    # the drawing is also valid in the normalised coordinates
    moved = [prep.transform.map_line(l) for l in L]
    assert verify_drawing(g, moved, Drawing(d.assignment, d.prepared_points, d.edges)).ok


def test_drawing_is_deterministic():
    rng = random.Random(9)
    g = random_triangulation(15, rng)
    L = generic_lines(15, rng)
    assert draw_on_lines(g, L) == draw_on_lines(g, L)


def test_wrong_line_count():
    with pytest.raises(ValueError):
        draw_on_lines(k4(), generic_lines(5, random.Random(0)))


def test_max_slope_rule_can_fail():
    # v1 = (0, 0), v2 = (10, 0), v_i = (9, 1), leftmost line y = 5x.
    # Half the larger of the two slopes gives s = 1/2, and the slope-s line
    # through v_i meets y = 5x below the axis; half the smaller does not.
    vi = P(9, 1)
    s1, s2 = F(1, 9), F(1)
    left = GeneralLine.from_slope_intercept(5, 0)
    for s, sign in ((max(s1, s2) / 2, -1), (min(s1, s2) / 2, 1)):
        through = GeneralLine(s, -1, s * vi.x - vi.y)
        y = line_intersection(through, left).y
        assert (y > 0) == (sign > 0)


# -- verification ----------------------------------------------------------


def test_swapped_points_fail_incidence():
    g = octahedron()
    L = generic_lines(6, random.Random(3))
    d = draw_on_lines(g, L)
    pts = list(d.points)
    pts[0], pts[1] = pts[1], pts[0]
    rep = verify_drawing(g, L, Drawing(d.assignment, tuple(pts), d.edges))
    assert not rep.checks["incidence"]


def square_k4():
    corners = [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]
    L = [GeneralLine(m, -1, m * p.x - p.y) for m, p in zip((1, 2, -1, 3), corners)]
    return corners, L


def test_x_crossing_is_caught():
    corners, L = square_k4()
    d = Drawing((0, 1, 2, 3), tuple(corners), tuple(k4().edges()))
    rep = verify_drawing(k4(), L, d)
    assert rep.checks["incidence"] and not rep.checks["crossing"]


def test_bad_assignment_is_caught():
    corners, L = square_k4()
    d = Drawing((0, 0, 2, 3), tuple(corners), tuple(k4().edges()))
    assert not verify_drawing(k4(), L, d).checks["bijection"]


def test_vertex_on_edge_is_caught():
    # K4 with the inner vertex on an outer edge
    pts = [P(0, 0), P(4, 0), P(1, 1), P(2, 0)]
    L = [GeneralLine(m, -1, m * p.x - p.y) for m, p in zip((1, 2, -1, 3), pts)]
    d = Drawing((0, 1, 2, 3), tuple(pts), tuple(k4().edges()))
    rep = verify_drawing(k4(), L, d)
    assert not rep.ok


# -- falsifier -------------------------------------------------------------


def test_falsifier_triangle():
    L = generic_lines(3, random.Random(2))
    for labelling in ([0, 1, 2], [2, 0, 1]):
        d = falsify_support(triangle(), labelling, L, budget=200, seed=0)
        assert d is not None
        assert list(d.assignment) == labelling
        assert verify_drawing(triangle(), L, d).ok


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_falsifier_contract(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 7)
    g = random_triangulation(n, rng)
    L = generic_lines(n, rng)
    labelling = list(range(n))
    rng.shuffle(labelling)
    d = falsify_support(g, labelling, L, budget=300, seed=seed)
    if d is not None:
        assert verify_drawing(g, L, d).ok
    assert falsify_support(g, labelling, L, budget=300, seed=seed) == d
