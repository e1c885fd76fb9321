import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from curvesum.arrangement import winding
from curvesum.curves import (
    Bridge,
    CurveLocation,
    mutual_crossings,
    self_crossings,
    validate_bridge,
    validate_generic,
)
from curvesum.errors import BridgeInvalid
from curvesum.generator import InstanceGenerator, RandomSpec
from curvesum.geom import cross_sign
from curvesum.sums import (
    bridge_stats,
    classify,
    compatible_orientations,
    construct_sum,
    expected_double_points,
    push_appendix,
)

from conftest import ccw_square, diamond_pair_with_interior_bridge, poly


def far_squares_with_bridge():
    c0 = poly((0, 0), (4, 1), (4, 4), (0, 5))
    c1 = poly((20, 0), (24, -1), (25, 4), (21, 5))
    bridge = Bridge(CurveLocation(1, mpq(1, 2)), CurveLocation(3, mpq(1, 2)), ())
    return c0, c1, bridge


def test_validate_bridge_straight_segment():
    c0, c1, bridge = far_squares_with_bridge()
    assert validate_bridge(bridge, c0, c1).ok
    stats = bridge_stats(c0, c1, bridge)
    assert stats.n_gamma == 0
    assert stats.interior_count == 0


def test_bridge_endpoint_on_double_point_rejected():
    gen = InstanceGenerator(RandomSpec(seed=1))
    while True:
        c0, _ = gen.piece()
        if self_crossings(c0):
            break
    c1 = ccw_square().translate((mpq(200), mpq(0)))
    dp = self_crossings(c0)[0]
    bad = Bridge(CurveLocation(dp.branch1.edge, dp.branch1.t),
                 CurveLocation(0, mpq(1, 2)), ())
    assert not validate_bridge(bad, c0, c1).ok


def test_compatible_orientations_mutual():
    c0, c1, bridge = far_squares_with_bridge()
    oriented = compatible_orientations(c0, c1, bridge)
    poly_line = bridge.polyline(c0, c1)
    v0 = (poly_line[1][0] - poly_line[0][0], poly_line[1][1] - poly_line[0][1])
    v1 = (poly_line[-2][0] - poly_line[-1][0], poly_line[-2][1] - poly_line[-1][1])
    assert cross_sign(v0, oriented.c0.edge_dir(oriented.loc0.edge)) == 1
    assert cross_sign(v1, oriented.c1.edge_dir(oriented.loc1.edge)) == 1


def test_classify_connected_sum():
    c0, c1, bridge = far_squares_with_bridge()
    kind = classify(c0, c1, bridge)
    assert kind.is_connected_sum and kind.is_strange_sum and kind.plain_bridge


def test_classify_interior_crossing_strange():
    c0, c1, bridge = diamond_pair_with_interior_bridge()
    kind = classify(c0, c1, bridge)
    assert kind.is_strange_sum
    assert not kind.is_connected_sum
    assert not kind.plain_bridge


def test_connected_sum_of_squares_is_simple():
    c0, c1, bridge = far_squares_with_bridge()
    built = construct_sum(c0, c1, bridge)
    assert validate_generic(built.curve).ok
    assert built.double_points == 0


def test_sum_with_one_interior_crossing():
    c0, c1, bridge = diamond_pair_with_interior_bridge()
    built = construct_sum(c0, c1, bridge)
    assert built.double_points == 2


def test_strange_sum_with_loop_gets_four_crossings():
    c0 = poly((0, 0), (4, 1), (4, 4), (0, 5))
    c1 = poly((40, 0), (44, -1), (45, 4), (41, 5))
    # bridge with one self-crossing, clear of both curves
    interior = ((mpq(14), mpq(8)), (mpq(20), mpq(-2)), (mpq(8), mpq(2)))
    bridge = Bridge(CurveLocation(1, mpq(1, 2)), CurveLocation(3, mpq(1, 2)),
                    interior)
    stats = bridge_stats(c0, c1, bridge)
    assert stats.n_gamma == 1
    assert stats.interior_count == 0
    built = construct_sum(c0, c1, bridge)
    assert built.double_points == 4


def test_expected_double_points_formula():
    assert expected_double_points(2, 3, 4, 5, 6) == 2 + 3 + 4 + 2 * 5 + 4 * 6


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_construction_count_random(seed):
    gen = InstanceGenerator(RandomSpec(seed=seed))
    bi = gen.bridged_instance()
    stats = bridge_stats(bi.c0, bi.c1, bi.bridge)
    built = construct_sum(bi.c0, bi.c1, bi.bridge)
    assert validate_generic(built.curve).ok
    assert built.double_points == expected_double_points(
        len(self_crossings(bi.c0)),
        len(self_crossings(bi.c1)),
        len(mutual_crossings(bi.c0, bi.c1)),
        stats.interior_count,
        stats.n_gamma,
    )


def test_push_appendix_crossing_free():
    c0, c1, bridge = far_squares_with_bridge()
    pushed = push_appendix(c0, c1, bridge)
    assert validate_generic(pushed.curve0).ok
    assert len(self_crossings(pushed.curve0)) == 0
    stats = bridge_stats(pushed.curve0, c1, pushed.bridge)
    assert stats.n_gamma == 0 and stats.interior_count == 0


def test_push_appendix_through_one_crossing():
    c0, c1, bridge = diamond_pair_with_interior_bridge()
    pushed = push_appendix(c0, c1, bridge)
    # the finger pokes through C0 once: two new double points
    assert len(self_crossings(pushed.curve0)) == len(self_crossings(c0)) + 2
    stats = bridge_stats(pushed.curve0, c1, pushed.bridge)
    assert stats.n_gamma == 0 and stats.interior_count == 0


def test_interior_crossing_signs_match_index_jump():
    # Sum of the s-signs along the bridge equals the index drop between
    # the two reference regions, independently for each endpoint.
    c0, c1, bridge = diamond_pair_with_interior_bridge()
    stats = bridge_stats(c0, c1, bridge)
    assert stats.ind_r0_v0 - stats.ind_v0 == -sum(
        x.s for x in stats.crossings_with(0))
    assert stats.ind_r1_v1 - stats.ind_v1 == -sum(
        x.s for x in stats.crossings_with(1))
    assert stats.ind_v0 == -1 and stats.ind_v1 == 0
