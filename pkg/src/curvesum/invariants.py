"""Arnold-invariant ledgers (J+, J-, St) and the rules that propagate
them through sums of curves along bridges.

A ledger is pure bookkeeping: it never inspects the curve it describes.
The summation rules consume ledgers of the two summands plus the bridge
statistics, and produce the ledger of the sum.  Consistency of a ledger
with an actual polyline realization is checked separately.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Tuple

from .curves import Bridge, PolyCurve, mutual_crossings, self_crossings
from .errors import HypothesisViolated, InconsistentInputs, NotSeparated
from .sums import BridgeStats, SumClass, bridge_stats, classify
from .t_invariants import TPair, t_pm, t_st


@dataclass(frozen=True)
class InvariantLedger:
    j_plus: int
    j_minus: int
    st: int
    double_points: int
    provenance: Tuple[str, ...] = ()

    def describe(self) -> str:
        return (
            f"J+={self.j_plus} J-={self.j_minus} St={self.st} "
            f"d={self.double_points}"
        )


def base_invariants(n: int) -> InvariantLedger:
    """Ledger of the standard curve with rotation number n: the embedded
    circle for n=1, the figure eight for n=0, and n-1 positive curls on a
    circle otherwise."""
    if n < 0:
        raise ValueError("standard curves are indexed by n >= 0")
    if n == 0:
        return InvariantLedger(0, -1, 0, 1, ("standard:0",))
    return InvariantLedger(
        -2 * (n - 1), -3 * (n - 1), n - 1, n - 1, (f"standard:{n}",)
    )


def _combine_provenance(op: str, a: InvariantLedger, b: InvariantLedger) -> Tuple[str, ...]:
    return (op, *a.provenance, *b.provenance)


@dataclass(frozen=True)
class SumInputs:
    """Everything the summation rules need besides the two ledgers."""

    stats: BridgeStats
    t_pair: TPair
    t_triple: int
    mutual: int  # |C0 * C1|

    @classmethod
    def measure(cls, c0: PolyCurve, c1: PolyCurve, bridge: Bridge,
                stats: Optional[BridgeStats] = None) -> "SumInputs":
        if stats is None:
            stats = bridge_stats(c0, c1, bridge)
        # tangency signs are read off the bridge-compatible orientations
        return cls(
            stats=stats,
            t_pair=t_pm(stats.oriented.c0, stats.oriented.c1),
            t_triple=t_st(c0, c1, bridge, stats),
            mutual=len(mutual_crossings(c0, c1)),
        )


def sum_invariants(l0: InvariantLedger, l1: InvariantLedger,
                   inputs: SumInputs) -> InvariantLedger:
    """Ledger of the generalized connected sum along the bridge."""
    st_ = inputs.stats
    params = [x.bridge_param for x in st_.interior]
    if params != sorted(params):
        raise InconsistentInputs("interior crossings must be ordered along the bridge")
    k = st_.interior_count
    n_gamma = st_.n_gamma
    ind_sum = st_.ind_v0 + st_.ind_v1 + st_.ind_r0_v0 + st_.ind_r1_v1

    j_plus = (
        l0.j_plus + l1.j_plus - 2 * inputs.t_pair.plus
        + ind_sum + 2 * n_gamma + k
    )
    j_minus = (
        l0.j_minus + l1.j_minus + 2 * inputs.t_pair.minus
        + ind_sum - 2 * n_gamma - k
    )

    cross_pairs = 0
    for i, x in enumerate(st_.interior):
        if x.curve_id != 0:
            continue
        for y in st_.interior[i + 1:]:
            if y.curve_id == 1:
                cross_pairs += x.s * y.s
    st = (
        l0.st + l1.st - inputs.t_triple
        + 2 * st_.ind_v0 * st_.ind_v1 - 2 * cross_pairs
    )

    d = l0.double_points + l1.double_points + inputs.mutual + 2 * k + 4 * n_gamma
    return InvariantLedger(j_plus, j_minus, st, d, _combine_provenance("sum", l0, l1))


def strange_sum_invariants(l0: InvariantLedger, l1: InvariantLedger,
                           inputs: SumInputs,
                           kind: Optional[SumClass] = None) -> InvariantLedger:
    """Specialization to separated summands: the tangency terms vanish and
    St is plainly additive."""
    if kind is not None and not kind.is_strange_sum:
        raise NotSeparated("summands are not separated")
    st_ = inputs.stats
    k = st_.interior_count
    ind_sum = st_.ind_v0 + st_.ind_v1
    j_plus = l0.j_plus + l1.j_plus + ind_sum + 2 * st_.n_gamma + k
    j_minus = l0.j_minus + l1.j_minus + ind_sum - 2 * st_.n_gamma - k
    st = l0.st + l1.st
    d = l0.double_points + l1.double_points + 2 * k + 4 * st_.n_gamma
    return InvariantLedger(
        j_plus, j_minus, st, d, _combine_provenance("strange-sum", l0, l1)
    )


def plain_bridge_invariants(l0: InvariantLedger, l1: InvariantLedger,
                            inputs: SumInputs,
                            kind: Optional[SumClass] = None) -> InvariantLedger:
    """Specialization to an embedded bridge missing both curves (the curves
    themselves may still cross)."""
    if kind is not None and not kind.plain_bridge:
        raise HypothesisViolated("bridge has self-crossings or meets a curve")
    st_ = inputs.stats
    ind2 = 2 * (st_.ind_v0 + st_.ind_v1)
    j_plus = l0.j_plus + l1.j_plus - 2 * inputs.t_pair.plus + ind2
    j_minus = l0.j_minus + l1.j_minus + 2 * inputs.t_pair.minus + ind2
    st = l0.st + l1.st - inputs.t_triple + 2 * st_.ind_v0 * st_.ind_v1
    d = l0.double_points + l1.double_points + inputs.mutual
    return InvariantLedger(
        j_plus, j_minus, st, d, _combine_provenance("plain-bridge-sum", l0, l1)
    )


def connected_sum_invariants(l0: InvariantLedger, l1: InvariantLedger
                             ) -> InvariantLedger:
    """Classical connected sum: separated curves, embedded disjoint bridge.
    All three invariants are additive."""
    return InvariantLedger(
        l0.j_plus + l1.j_plus,
        l0.j_minus + l1.j_minus,
        l0.st + l1.st,
        l0.double_points + l1.double_points,
        _combine_provenance("connected-sum", l0, l1),
    )


@dataclass(frozen=True)
class ConsistencyReport:
    ok: bool
    difference_delta: int  # (J+ - J-) - d
    realization_delta: Optional[int]  # ledger d - |D(curve)|, when checked

    def describe(self) -> str:
        if self.ok:
            return "consistent"
        parts = [f"(J+ - J-) - d = {self.difference_delta}"]
        if self.realization_delta is not None:
            parts.append(f"ledger d - realized d = {self.realization_delta}")
        return "inconsistent: " + ", ".join(parts)


def consistency_check(ledger: InvariantLedger,
                      realization: Optional[PolyCurve] = None,
                      d_count: Optional[int] = None) -> ConsistencyReport:
    """The one identity every ledger must satisfy: J+ - J- equals the
    double-point count; optionally also check the count against a claimed
    polyline realization."""
    diff = (ledger.j_plus - ledger.j_minus) - ledger.double_points
    real: Optional[int] = None
    if realization is not None:
        d_count = len(self_crossings(realization))
    if d_count is not None:
        real = ledger.double_points - d_count
    ok = diff == 0 and not real
    return ConsistencyReport(ok, diff, real)
