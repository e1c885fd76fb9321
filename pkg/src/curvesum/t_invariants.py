"""Closed-form tangency and triple-point counts for a pair of curves.

``t_pm`` counts, with sign, the direct and inverse tangency moments of any
generic homotopy separating the two curves; ``t_st`` counts its triple
points.  Both are computed combinatorially from the initial configuration,
with no homotopy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .arrangement import rotation_number, winding
from .combinatorics import (
    disk_intersection_components,
    e_sign,
    is_simple,
    separated,
    splice,
)
from .curves import (
    Bridge,
    CurveLocation,
    PolyCurve,
    mutual_crossings,
    self_crossings,
    validate_general_position,
)
from .errors import HypothesisViolated, NotSeparated, NotSimple
from .sums import BridgeStats, bridge_stats, compatible_orientations, push_appendix


class TPair(NamedTuple):
    plus: int
    minus: int

    @property
    def total_tangencies(self) -> int:
        return -(self.plus + self.minus)


def t_pm_simple(c0: PolyCurve, c1: PolyCurve) -> TPair:
    """Tangency counts for two simple closed curves: with m common points
    and s components of the intersection of the two disks, the pair is
    (-m/2 + s, -s) when the rotation numbers agree and swapped otherwise."""
    for c in (c0, c1):
        if not is_simple(c):
            raise NotSimple("closed-form tangency count needs simple curves")
    validate_general_position(c0, c1).raise_if_failed()
    if separated(c0, c1):
        return TPair(0, 0)
    m = len(mutual_crossings(c0, c1))
    s = len(disk_intersection_components(c0, c1))
    same = rotation_number(c0) == rotation_number(c1)
    a, b = -m // 2 + s, -s
    return TPair(a, b) if same else TPair(b, a)


def t_pm_polygon(c0: PolyCurve, c1: PolyCurve) -> TPair:
    """The same counts from the polygon decomposition: the component with
    2k_i corners contributes -(k_i - 1) direct and -1 inverse tangencies
    when the rotations agree."""
    for c in (c0, c1):
        if not is_simple(c):
            raise NotSimple("polygon decomposition needs simple curves")
    validate_general_position(c0, c1).raise_if_failed()
    if separated(c0, c1):
        return TPair(0, 0)
    comps = disk_intersection_components(c0, c1)
    same = rotation_number(c0) == rotation_number(c1)
    a = -sum(p.k - 1 for p in comps)
    b = -len(comps)
    return TPair(a, b) if same else TPair(b, a)


def t_pm(c0: PolyCurve, c1: PolyCurve) -> TPair:
    """Tangency counts for arbitrary generic curves, by smoothing every
    double point and summing over the resulting pairs of simple curves."""
    validate_general_position(c0, c1).raise_if_failed()
    parts0 = splice(c0, context=[c1])
    parts1 = splice(c1, context=[c0])
    plus = minus = 0
    for a in parts0:
        for b in parts1:
            p = t_pm_simple(a, b)
            plus += p.plus
            minus += p.minus
    return TPair(plus, minus)


def t_st(c0: PolyCurve, c1: PolyCurve, bridge: Bridge,
         stats: Optional[BridgeStats] = None) -> int:
    """Triple-point count of a separating homotopy, from the initial
    configuration: each double point of one curve contributes its traversal
    sign (seen from that curve's bridge endpoint) times the winding of the
    other curve around it."""
    if stats is None:
        stats = bridge_stats(c0, c1, bridge)
    o = stats.oriented
    total = 0
    for curve, base, other in ((o.c0, o.loc0, o.c1), (o.c1, o.loc1, o.c0)):
        for cr in self_crossings(curve):
            total += e_sign(curve, base, cr) * winding(other, cr.point)
    return total


@dataclass(frozen=True)
class AppendixComparison:
    pushed: int  # t_st of the finger-pushed configuration
    original: int  # t_st of the original configuration
    correction: int  # -2 * sum of s(x) * winding(C1, x) over bridge-C0 crossings

    @property
    def holds(self) -> bool:
        return self.pushed == self.original + self.correction


def t_st_appendix_identity(c0: PolyCurve, c1: PolyCurve, bridge: Bridge) -> AppendixComparison:
    """Pushing the first curve along the bridge changes the triple-point
    count by -2 s(x) ind(x) for every bridge crossing x with that curve,
    where ind(x) is the winding of the second curve around x."""
    stats = bridge_stats(c0, c1, bridge)
    pushed = push_appendix(c0, c1, bridge)
    lhs = t_st(pushed.curve0, c1, pushed.bridge)
    rhs = t_st(c0, c1, bridge, stats)
    corr = -2 * sum(
        x.s * winding(stats.oriented.c1, x.point) for x in stats.crossings_with(0)
    )
    return AppendixComparison(pushed=lhs, original=rhs, correction=corr)
