from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from curvesum.arrangement import rotation_number
from curvesum.combinatorics import (
    disk_intersection_components,
    e_sign,
    is_simple,
    separated,
    splice,
)
from curvesum.curves import (
    CurveLocation,
    mutual_crossings,
    self_crossings,
    validate_general_position,
)
from curvesum.generator import InstanceGenerator, RandomSpec
from curvesum.geom import cross_sign, sub
from curvesum.sums import reverse_location

from conftest import bowtie, ccw_square, lens_pair, nested_diamonds, poly, two_loop_in_ring


def test_e_sign_bowtie_fixed_value():
    c = bowtie()
    base = CurveLocation(0, mpq(1, 4))
    [crossing] = self_crossings(c)
    # first visit leaves along edge 0 (direction (2,2)), second along
    # edge 2 (direction (-2,2)); their determinant is positive
    expected = cross_sign((mpq(2), mpq(2)), (mpq(-2), mpq(2)))
    assert expected == 1
    assert e_sign(c, base, crossing) == expected


def test_e_sign_flips_under_reversal():
    c = bowtie()
    base = CurveLocation(0, mpq(1, 4))
    [crossing] = self_crossings(c)
    rc = c.reverse()
    [rcrossing] = self_crossings(rc)
    assert e_sign(rc, reverse_location(c, base), rcrossing) == -e_sign(c, base, crossing)


def test_e_sign_base_moves_within_edge():
    c = bowtie()
    [crossing] = self_crossings(c)
    vals = {e_sign(c, CurveLocation(0, t), crossing)
            for t in (mpq(1, 7), mpq(1, 4), mpq(2, 5))}
    assert len(vals) == 1


def test_splice_simple_curve_identity():
    sq = ccw_square()
    out = splice(sq)
    assert len(out) == 1
    assert out[0] == sq


def test_splice_bowtie_two_components():
    out = splice(bowtie())
    assert len(out) == 2
    assert all(is_simple(c) for c in out)
    assert sorted(rotation_number(c) for c in out) == [-1, 1]


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_splice_properties_random(seed):
    gen = InstanceGenerator(RandomSpec(seed=seed))
    c, _ = gen.piece()
    parts = splice(c)
    assert len(parts) >= 1
    assert all(is_simple(p) for p in parts)
    assert sum(rotation_number(p) for p in parts) == rotation_number(c)
    for i, p in enumerate(parts):
        for q in parts[i + 1:]:
            assert validate_general_position(p, q).ok
            assert not mutual_crossings(p, q)
    # re-splicing is the identity on each component
    for p in parts:
        assert splice(p) == [p]


def test_splice_preserves_mutual_crossings():
    c0, ring = two_loop_in_ring()
    parts = splice(c0, context=(ring,))
    total = sum(len(mutual_crossings(p, ring)) for p in parts)
    assert total == len(mutual_crossings(c0, ring))


def test_disk_components_disjoint():
    a = ccw_square()
    b = a.translate((mpq(20), mpq(0)))
    assert disk_intersection_components(a, b) == []


def test_disk_components_lens():
    a, b = lens_pair()
    comps = disk_intersection_components(a, b)
    assert len(comps) == 1
    assert comps[0].k == 1
    assert len(comps[0].boundary) == 2


def test_disk_components_flower():
    # two triangles overlapping in a six-pointed star: six crossings
    up = poly((0, 0), (12, 0), (6, 10))
    down = poly((0, 7), (6, -3), (12, 7))
    assert validate_general_position(up, down).ok
    m = len(mutual_crossings(up, down))
    assert m == 6
    comps = disk_intersection_components(up, down)
    assert sum(2 * c.k for c in comps) == m


def test_separated_cases():
    a = ccw_square()
    assert separated(a, a.translate((mpq(100), mpq(0))))
    inner, outer = nested_diamonds()
    assert not separated(inner, outer)
    assert not separated(*lens_pair())
