import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from curvesum.curves import Bridge, CurveLocation, standard_curve
from curvesum.errors import HypothesisViolated, NotSeparated
from curvesum.generator import InstanceGenerator, RandomSpec
from curvesum.invariants import (
    InvariantLedger,
    SumInputs,
    base_invariants,
    connected_sum_invariants,
    consistency_check,
    plain_bridge_invariants,
    strange_sum_invariants,
    sum_invariants,
)
from curvesum.sums import classify, construct_sum

from conftest import diamond_pair_with_interior_bridge, poly

# anchor values for the standard curves, n = 0..6
BASE_TABLE = {
    0: (0, -1, 0, 1),
    1: (0, 0, 0, 0),
    2: (-2, -3, 1, 1),
    3: (-4, -6, 2, 2),
    4: (-6, -9, 3, 3),
    5: (-8, -12, 4, 4),
    6: (-10, -15, 5, 5),
}


@pytest.mark.parametrize("n", sorted(BASE_TABLE))
def test_base_invariants_table(n):
    led = base_invariants(n)
    assert (led.j_plus, led.j_minus, led.st, led.double_points) == BASE_TABLE[n]
    assert consistency_check(led).ok


def test_connected_sum_of_standard_curves():
    # plain additivity; cross-checked against the general formula and a
    # constructed realization
    gen = InstanceGenerator(RandomSpec(seed=5))
    k2, k3 = standard_curve(2), standard_curve(3)
    k3 = k3.translate((mpq(40), mpq(1, 3)))
    bridge = gen.bridge(k2, k3, plain=True, straight=True, loops=False)
    kind = classify(k2, k3, bridge)
    assert kind.is_connected_sum
    l2, l3 = base_invariants(2), base_invariants(3)
    added = connected_sum_invariants(l2, l3)
    assert (added.j_plus, added.j_minus, added.st) == (-6, -9, 3)
    inputs = SumInputs.measure(k2, k3, bridge)
    general = sum_invariants(l2, l3, inputs)
    assert (general.j_plus, general.j_minus, general.st) == (-6, -9, 3)
    built = construct_sum(k2, k3, bridge)
    assert built.double_points == general.double_points == 3


def test_strange_sum_fixed_instance():
    # two simple curves, bridge dipping once through the first curve:
    # the interior crossing costs one unit on each side of the ledger
    c0, c1, bridge = diamond_pair_with_interior_bridge()
    l0 = l1 = base_invariants(1)
    inputs = SumInputs.measure(c0, c1, bridge)
    led = sum_invariants(l0, l1, inputs)
    assert (led.j_plus, led.j_minus, led.st) == (0, -2, 0)
    assert led.double_points == 2
    alt = strange_sum_invariants(l0, l1, inputs)
    assert (alt.j_plus, alt.j_minus, alt.st) == (0, -2, 0)
    rep = consistency_check(led, construct_sum(c0, c1, bridge).curve)
    assert rep.ok


def test_strange_sum_requires_separation():
    gen = InstanceGenerator(RandomSpec(seed=2))
    bi = gen.bridged_instance()
    while True:
        from curvesum.combinatorics import separated

        if not separated(bi.c0, bi.c1):
            break
        bi = gen.bridged_instance()
    inputs = SumInputs.measure(bi.c0, bi.c1, bi.bridge)
    kind = classify(bi.c0, bi.c1, bi.bridge)
    with pytest.raises(NotSeparated):
        strange_sum_invariants(bi.l0, bi.l1, inputs, kind=kind)


def test_plain_bridge_requires_empty_bridge():
    c0, c1, bridge = diamond_pair_with_interior_bridge()
    inputs = SumInputs.measure(c0, c1, bridge)
    kind = classify(c0, c1, bridge)
    with pytest.raises(HypothesisViolated):
        plain_bridge_invariants(base_invariants(1), base_invariants(1),
                                inputs, kind=kind)


def test_consistency_check_flags_corruption():
    led = base_invariants(5)
    bad = InvariantLedger(led.j_plus + 1, led.j_minus, led.st,
                          led.double_points, led.provenance)
    rep = consistency_check(bad)
    assert not rep.ok
    assert rep.difference_delta != 0


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_ledger_difference_identity_random(seed):
    gen = InstanceGenerator(RandomSpec(seed=seed))
    bi = gen.bridged_instance()
    inputs = SumInputs.measure(bi.c0, bi.c1, bi.bridge)
    led = sum_invariants(bi.l0, bi.l1, inputs)
    built = construct_sum(bi.c0, bi.c1, bi.bridge)
    rep = consistency_check(led, built.curve)
    assert rep.ok
    assert led.j_plus - led.j_minus == built.double_points


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_strange_reduction_random(seed):
    gen = InstanceGenerator(RandomSpec(seed=seed))
    bi = gen.bridged_instance(separated_pair=True)
    inputs = SumInputs.measure(bi.c0, bi.c1, bi.bridge)
    led = sum_invariants(bi.l0, bi.l1, inputs)
    alt = strange_sum_invariants(bi.l0, bi.l1, inputs)
    assert (led.j_plus, led.j_minus, led.st) == (alt.j_plus, alt.j_minus, alt.st)
    assert led.st == bi.l0.st + bi.l1.st


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_plain_bridge_reduction_random(seed):
    gen = InstanceGenerator(RandomSpec(seed=seed))
    bi = gen.bridged_instance(plain=True)
    inputs = SumInputs.measure(bi.c0, bi.c1, bi.bridge)
    led = sum_invariants(bi.l0, bi.l1, inputs)
    alt = plain_bridge_invariants(bi.l0, bi.l1, inputs)
    assert (led.j_plus, led.j_minus, led.st) == (alt.j_plus, alt.j_minus, alt.st)


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_sum_symmetric_under_swap(seed):
    # swapping the curves and reversing the bridge describes the same
    # unoriented sum curve, so the ledger must not change
    gen = InstanceGenerator(RandomSpec(seed=seed))
    bi = gen.bridged_instance()
    inputs = SumInputs.measure(bi.c0, bi.c1, bi.bridge)
    led = sum_invariants(bi.l0, bi.l1, inputs)
    swapped = Bridge(bi.bridge.end, bi.bridge.start,
                     tuple(reversed(bi.bridge.interior)))
    inputs2 = SumInputs.measure(bi.c1, bi.c0, swapped)
    led2 = sum_invariants(bi.l1, bi.l0, inputs2)
    assert (led.j_plus, led.j_minus, led.st, led.double_points) == (
        led2.j_plus, led2.j_minus, led2.st, led2.double_points)
