from gmpy2 import mpq

from curvesum.generator import InstanceGenerator, RandomSpec
from curvesum.homotopy import simulate_separation
from curvesum.render import render_configuration, render_filmstrip

from conftest import ccw_square, lens_pair


def test_single_square_svg():
    svg = render_configuration(ccw_square())
    assert svg.startswith("<?xml")
    assert 'id="curve-0"' in svg
    # winding labels for the bounded face
    assert ">1<" in svg or ">-1<" in svg


def test_render_is_deterministic():
    a, b = lens_pair()
    assert render_configuration(a, b) == render_configuration(a, b)
    svg = render_configuration(a, b)
    assert 'id="curve-1"' in svg
    assert 'id="crossing-0"' in svg and 'id="crossing-1"' in svg


def test_render_bridge():
    gen = InstanceGenerator(RandomSpec(seed=4))
    bi = gen.bridged_instance()
    svg = render_configuration(bi.c0, bi.c1, bi.bridge)
    assert 'id="bridge-0"' in svg


def test_filmstrip_panels():
    a, b = lens_pair()
    res = simulate_separation(a, b)
    svg = render_filmstrip(a, b, res.events, res.direction)
    assert svg.count("<svg") == 1
    # tangency events exist for the lens, so panels must be emitted,
    # each with both curves drawn and the contact point circled
    assert svg.count("<path") >= 2
    assert "<circle" in svg
