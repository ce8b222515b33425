import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linecut.errors import InfeasibleScale, SizeLimitExceeded, TargetUnreachable
from linecut.generators import random_arrangement
from linecut.geometry import GeneralLine, Point, convex_hull, in_convex_position, line_meets_hull
from linecut.mu import Arrangement, mu_region_bruteforce, witness_is_valid
from linecut.partition import (
    best_cut_value,
    ceil_sqrt,
    centerpoint,
    centerpoint_bound,
    closed_sides,
    common_transversal_exists,
    convex_position_points,
    convex_position_subsets,
    cut_candidates,
    depth,
    depth_bruteforce,
    evaluate_cut,
    ham_sandwich_cut,
    pencil_arrangement,
    pencil_pair,
    same_type_triple,
    well_separated,
)


def P(x, y):
    return Point(F(x), F(y))


def triangle_lines():
    return Arrangement([GeneralLine(0, 1, 0), GeneralLine(1, -1, 0), GeneralLine(1, 1, 4)])


def pencil_at(center, slopes):
    return [GeneralLine(m, -1, m * center.x - center.y) for m in slopes]


# -- helpers ---------------------------------------------------------------


@pytest.mark.parametrize("n, s, c", [(1, 1, 1), (3, 2, 1), (4, 2, 2), (9, 3, 2), (10, 4, 2), (12, 4, 2), (13, 4, 3)])
def test_rounding_helpers(n, s, c):
    assert ceil_sqrt(n) == s
    assert centerpoint_bound(n) == c


def test_closed_sides_share_the_boundary():
    plus, minus = closed_sides(GeneralLine(1, 2, 3))
    on = P(3, 0)
    assert plus.contains(on) and minus.contains(on)
    assert plus.contains(P(10, 0)) and not minus.contains(P(10, 0))


# -- ham-sandwich cuts -----------------------------------------------------


def test_single_lines_give_trivial_cut():
    A1 = Arrangement([GeneralLine(1, 0, 0)])
    A2 = Arrangement([GeneralLine(0, 1, 0)])
    res = ham_sandwich_cut(A1, A2)
    assert res.values == (1, 1, 1, 1)


def _check_cut(A1, A2, res):
    for A, sides in ((A1, res.witnesses[0]), (A2, res.witnesses[1])):
        for h, r in zip(res.halfplanes(), sides):
            assert witness_is_valid(A, r.witness, h.contains)
            assert r.value == mu_region_bruteforce(A, [h]).value


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_ham_sandwich_guarantee(seed):
    rng = random.Random(seed)
    A1 = random_arrangement(rng.randint(2, 7), rng)
    A2 = random_arrangement(rng.randint(2, 7), rng)
    res = ham_sandwich_cut(A1, A2)
    v = res.values
    assert min(v[:2]) >= ceil_sqrt(len(A1)) and min(v[2:]) >= ceil_sqrt(len(A2))
    _check_cut(A1, A2, res)


def test_pencil_pair_k2_cut():
    A1, A2 = pencil_pair(2)
    res = ham_sandwich_cut(A1, A2)
    assert res.min_value == 2
    assert best_cut_value(A1, A2)[0] == 2
    _check_cut(A1, A2, res)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6), st.fractions(min_value=F(1, 4), max_value=6, max_denominator=4))
def test_cut_values_are_scale_invariant(seed, k):
    rng = random.Random(seed)
    A1, A2 = random_arrangement(4, rng), random_arrangement(4, rng)
    for line in cut_candidates(sorted(set(A1.points()) | set(A2.points())))[:15]:
        scaled = GeneralLine(line.a, line.b, line.c * k)
        assert evaluate_cut(A1, A2, line).values == evaluate_cut(A1.scaled(k), A2.scaled(k), scaled).values


# -- depth and centerpoints ------------------------------------------------


def test_triangle_centroid_depth():
    A = triangle_lines()
    pts = A.points()
    q = Point(sum(p.x for p in pts) / 3, sum(p.y for p in pts) / 3)
    cert = depth(A, q)
    # at least the guaranteed 1; every line through q leaves one vertex alone
    assert cert.depth >= 1
    assert cert.depth == depth_bruteforce(A, q) == 2


def test_concurrent_point_has_full_depth():
    A = Arrangement(pencil_at(P(2, 3), [1, 2, 3]))
    assert depth(A, P(2, 3)).depth == 3
    assert depth(A, P(0, 0)).depth == 1


def test_pencil_middle_center_depth():
    A = pencil_arrangement(3)
    q = P(F(-1, 2), 2)
    assert depth(A, q).depth == depth_bruteforce(A, q)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_depth_matches_oracle(seed):
    rng = random.Random(seed)
    A = random_arrangement(rng.randint(1, 7), rng)
    pts = A.points()
    q = rng.choice(pts) if pts and rng.random() < 0.5 else P(F(rng.randint(-20, 20), 4), F(rng.randint(-20, 20), 4))
    cert = depth(A, q)
    assert cert.depth == depth_bruteforce(A, q)
    assert cert.halfplane.contains(q)
    assert witness_is_valid(A, cert.witness, cert.halfplane.contains)


def test_centerpoint_small_cases():
    assert centerpoint(triangle_lines()).depth >= 1
    A = pencil_arrangement(3)
    cert = centerpoint(A)
    assert cert.depth >= 2
    assert depth_bruteforce(A, cert.point) >= 2


def test_centerpoint_size_limit():
    with pytest.raises(SizeLimitExceeded):
        centerpoint(random_arrangement(13, random.Random(0)))


# -- pencils ---------------------------------------------------------------


@pytest.mark.parametrize("k", [2, 3])
def test_unperturbed_pencils(k):
    A = pencil_arrangement(k)
    assert len(A) == k * k
    centers = {P(F(-1, 2), i) for i in range(1, k + 1)}
    assert centers <= set(A.points())
    assert all(p.x > F(1, 2) for p in A.points() if p not in centers)


@pytest.mark.parametrize("k, seed", [(2, 1), (3, 1), (3, 7)])
def test_perturbed_pencils_have_distinct_x(k, seed):
    A = pencil_arrangement(k, seed=seed)
    # pairs inside one pencil share its centre; distinct points get distinct x
    xs = [p.x for p in A.points()]
    assert len(set(xs)) == len(xs)
    assert len(A.points()) == len(A.vertex_map) - k * (k * (k - 1) // 2 - 1)
    assert pencil_arrangement(k, seed=seed) == A


@pytest.mark.parametrize("k", [2, 3])
def test_pencil_pair_non_interference(k):
    A1, A2 = pencil_pair(k)
    for X, Y in ((A1, A2), (A2, A1)):
        hull = convex_hull(Y.points())
        for p, q in combinations(X.points(), 2):
            assert not line_meets_hull(GeneralLine.through(p, q), hull)


# -- same type -------------------------------------------------------------


def test_common_transversal_examples():
    tri = lambda cx, cy: [P(cx - 1, cy - 1), P(cx + 1, cy - 1), P(cx, cy + 1)]
    along_axis = [convex_hull(tri(x, 0)) for x in (0, 10, 20)]
    line = common_transversal_exists(along_axis)
    assert line is not None and all(line_meets_hull(line, h) for h in along_axis)

    corners = [convex_hull(tri(x, y)) for x, y in ((0, 0), (100, 0), (50, 100))]
    assert common_transversal_exists(corners) is None
    assert well_separated(corners)

    same = convex_hull(tri(0, 0))
    assert common_transversal_exists([same, same, convex_hull(tri(1, 0))]) is not None


def test_separated_copies_are_left_alone():
    base = pencil_arrangement(2)
    arrs = [base.translated(F(dx), F(dy)) for dx, dy in ((0, 0), (100, 0), (0, 100))]
    res = same_type_triple(*arrs, target=2)
    assert res.rounds == 0
    assert res.subsets == ((0, 1, 2, 3),) * 3


def test_two_disjoint_one_overlapping():
    rng = random.Random(4)
    A1 = random_arrangement(5, rng, center=P(-200, 0))
    A2 = random_arrangement(5, rng, center=P(200, 0))
    A3 = random_arrangement(5, rng)
    res = same_type_triple(A1, A2, A3, target=1)
    assert res.rounds <= 4
    hulls = res.hulls((A1, A2, A3))
    assert common_transversal_exists(hulls) is None


def test_interleaved_triple():
    rng = random.Random(11)
    arrs = [random_arrangement(9, rng) for _ in range(3)]
    res = same_type_triple(*arrs, target=2)
    assert all(len(s) >= 2 for s in res.subsets)
    assert res.rounds <= 4
    assert common_transversal_exists(res.hulls(arrs)) is None
    for split, h in res.separators.items():
        assert h is not None


def test_target_unreachable():
    rng = random.Random(2)
    arrs = [random_arrangement(3, rng) for _ in range(3)]
    with pytest.raises(TargetUnreachable):
        same_type_triple(*arrs, target=4)


# -- convex position -------------------------------------------------------


def test_convex_position_points_examples():
    square = [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]
    assert convex_position_points(square, 4) == (0, 1, 2, 3)
    assert convex_position_points([P(0, 0), P(1, 0), P(2, 0)], 3) is None


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(-30, 30), st.integers(-30, 30)), min_size=5, max_size=5, unique=True))
def test_five_points_hold_a_convex_quadrilateral(raw):
    pts = [P(x, y) for x, y in raw]
    if any(not in_convex_position(list(t)) for t in combinations(pts, 3)):
        return  # not in general position
    idx = convex_position_points(pts, 4)
    assert idx is not None and in_convex_position([pts[i] for i in idx])


def test_convex_position_from_separated_pencils():
    lines = []
    for center, slopes in ((P(0, 0), (1, 2)), (P(10, 0), (3, 4)), (P(0, 10), (5, 6))):
        lines += pencil_at(center, slopes)
    groups = convex_position_subsets(Arrangement(lines), k=3, c=1, m=3)
    assert sorted(groups) == [(0, 1), (2, 3), (4, 5)]


def test_convex_position_30_lines():
    A = random_arrangement(30, random.Random(8), coef=30, offset=40)
    groups = convex_position_subsets(A, k=3, c=2, m=3)
    assert len(groups) == 3 and all(len(g) >= 2 for g in groups)


def test_convex_position_infeasible_scale():
    A = random_arrangement(6, random.Random(1))
    with pytest.raises(InfeasibleScale):
        convex_position_subsets(A, k=4, c=2, m=5)
