import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from curvesum import io_formats
from curvesum.generator import InstanceGenerator, RandomSpec
from curvesum.invariants import base_invariants


def test_rational_round_trip():
    for x in (mpq(0), mpq(-7, 3), mpq(22, 7), mpq(5)):
        assert io_formats.str_to_rational(io_formats.rational_to_str(x)) == x


def test_rational_strings_are_exact():
    assert io_formats.rational_to_str(mpq(-7, 3)) == "-7/3"
    assert io_formats.str_to_rational("5") == mpq(5)


def test_single_curve_round_trip():
    from curvesum.curves import standard_curve

    inst = io_formats.single_curve(standard_curve(3), base_invariants(3))
    text = io_formats.dumps(inst)
    back = io_formats.loads(text)
    assert back.curves == inst.curves
    assert back.ledgers[0] == inst.ledgers[0]
    # canonical emission is a fixed point
    assert io_formats.dumps(back) == text


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_bridged_instance_round_trip(seed):
    gen = InstanceGenerator(RandomSpec(seed=seed))
    bi = gen.bridged_instance()
    inst = io_formats.pair_with_bridge(bi.c0, bi.c1, bi.bridge, bi.l0, bi.l1)
    back = io_formats.loads(io_formats.dumps(inst))
    assert back.curves == inst.curves
    assert back.ledgers == inst.ledgers
    assert back.bridge == bi.bridge


def test_deterministic_generation():
    g1 = InstanceGenerator(RandomSpec(seed=123))
    g2 = InstanceGenerator(RandomSpec(seed=123))
    b1, b2 = g1.bridged_instance(), g2.bridged_instance()
    i1 = io_formats.pair_with_bridge(b1.c0, b1.c1, b1.bridge, b1.l0, b1.l1)
    i2 = io_formats.pair_with_bridge(b2.c0, b2.c1, b2.bridge, b2.l0, b2.l1)
    assert io_formats.dumps(i1) == io_formats.dumps(i2)


def test_file_round_trip(tmp_path):
    from curvesum.curves import standard_curve

    path = tmp_path / "inst.json"
    inst = io_formats.single_curve(standard_curve(0), base_invariants(0))
    io_formats.write_instance(str(path), inst)
    back = io_formats.read_instance(str(path))
    assert back.curves == inst.curves


def test_malformed_input_rejected():
    with pytest.raises(Exception):
        io_formats.loads("{}")
