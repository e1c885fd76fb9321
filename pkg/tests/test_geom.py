from gmpy2 import mpq
from hypothesis import given, strategies as st

from curvesum import geom


def pt(a, b):
    return (mpq(a), mpq(b))


rationals = st.builds(
    mpq,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=7),
)
points = st.tuples(rationals, rationals)


def test_orient_triangle():
    assert geom.orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert geom.orient(pt(0, 0), pt(1, 0), pt(2, 0)) == 0
    assert geom.orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1


def test_cross_sign_basis():
    assert geom.cross_sign(pt(1, 0), pt(0, 1)) == 1
    assert geom.cross_sign(pt(0, 1), pt(1, 0)) == -1
    assert geom.cross_sign(pt(2, 2), pt(1, 1)) == 0


def test_segment_intersection_transverse():
    hit = geom.segment_intersection(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0))
    assert hit is not None
    assert hit.kind == geom.TRANSVERSE
    assert hit.point == pt(1, 1)
    assert hit.t1 == mpq(1, 2) and hit.t2 == mpq(1, 2)


def test_segment_intersection_disjoint_collinear():
    assert geom.segment_intersection(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)) is None


def test_segment_intersection_endpoint_touch():
    hit = geom.segment_intersection(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 1))
    assert hit is not None
    assert hit.kind == geom.ENDPOINT
    assert hit.point == pt(1, 0)


@given(points, points, points, points)
def test_segment_intersection_symmetry(a, b, c, d):
    if a == b or c == d:
        return
    h1 = geom.segment_intersection(a, b, c, d)
    h2 = geom.segment_intersection(c, d, a, b)
    assert (h1 is None) == (h2 is None)
    if h1 is not None and h1.kind == geom.TRANSVERSE:
        assert h2.point == h1.point
        assert (h2.t1, h2.t2) == (h1.t2, h1.t1)


@given(points, points, points, points)
def test_transverse_point_lies_on_both_segments(a, b, c, d):
    if a == b or c == d:
        return
    hit = geom.segment_intersection(a, b, c, d)
    if hit is None or hit.kind != geom.TRANSVERSE:
        return
    assert geom.on_segment(hit.point, a, b)
    assert geom.on_segment(hit.point, c, d)
    assert 0 < hit.t1 < 1 and 0 < hit.t2 < 1
    assert hit.point == geom.lerp(a, b, hit.t1) == geom.lerp(c, d, hit.t2)


@given(points, points)
def test_cross_antisymmetric(u, v):
    assert geom.cross(u, v) == -geom.cross(v, u)
