"""Deterministic, seeded generation of random test instances.

Pieces are orientation-preserving affine images of the standard curves,
so every generated piece carries a known invariant ledger.  Bridges are
sampled polylines with optional self-crossing loops, validated by
rejection.  Simple curves for the polygon-decomposition checks are random
star-shaped polygons.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .arrangement import _angle_key_cmp  # deterministic angular order
from .combinatorics import separated
from .curves import (
    Bridge,
    CurveLocation,
    PolyCurve,
    mutual_crossings,
    self_crossings,
    standard_curve,
    validate_bridge,
    validate_general_position,
    validate_generic,
)
from .errors import CurvesumError, GenericityError
from .geom import Point, add, cross, scale, sub
from .homotopy import count_generic_directions
from .invariants import InvariantLedger, base_invariants


@dataclass(frozen=True)
class RandomSpec:
    """Bounds for the instance generator; generation is a pure function of
    the seed."""

    seed: int = 0
    d_max: int = 6  # double points per piece
    g_max: int = 3  # bridge self-crossings
    x_max: int = 6  # bridge interior crossings with the curves


@dataclass(frozen=True)
class PairInstance:
    c0: PolyCurve
    l0: InvariantLedger
    c1: PolyCurve
    l1: InvariantLedger


@dataclass(frozen=True)
class BridgedInstance:
    c0: PolyCurve
    l0: InvariantLedger
    c1: PolyCurve
    l1: InvariantLedger
    bridge: Bridge


def _max_index(d_max: int) -> int:
    # the standard curve of index n has n-1 double points (1 for n=0)
    return max(1, d_max + 1)


class InstanceGenerator:
    def __init__(self, spec: RandomSpec):
        self.spec = spec
        self.rng = random.Random(spec.seed)

    # -- low-level samplers -------------------------------------------------

    def _rational(self, lo: int, hi: int, dens=(1, 2, 3, 5, 7)) -> mpq:
        return mpq(self.rng.randint(lo, hi), self.rng.choice(dens))

    def _affine(self) -> Tuple[Tuple[mpq, mpq, mpq, mpq], Point]:
        while True:
            a, b, c, d = (self._rational(-6, 6) for _ in range(4))
            det = a * d - b * c
            if det > mpq(1, 4):
                shift = (self._rational(-60, 60), self._rational(-60, 60))
                return (a, b, c, d), shift

    def piece(self, d_max: Optional[int] = None) -> Tuple[PolyCurve, InvariantLedger]:
        """An affine image of a standard curve together with its ledger
        (invariants are preserved by orientation-preserving affine maps)."""
        d_max = self.spec.d_max if d_max is None else d_max
        for _ in range(200):
            n = self.rng.randint(0, _max_index(d_max))
            if (1 if n == 0 else n - 1) > d_max:
                continue
            matrix, shift = self._affine()
            curve = standard_curve(n).transform(matrix, shift)
            if validate_generic(curve).ok:
                return curve, base_invariants(n)
        raise CurvesumError("piece sampling exhausted")

    def star_polygon(self, nv: Optional[int] = None) -> PolyCurve:
        """A random star-shaped (hence simple) polygon around a random
        center; counterclockwise."""
        nv = nv or self.rng.randint(5, 9)
        center = (self._rational(-30, 30), self._rational(-30, 30))
        for _ in range(100):
            dirs = set()
            while len(dirs) < nv:
                v = (self.rng.randint(-9, 9), self.rng.randint(-9, 9))
                if v != (0, 0):
                    dirs.add((mpq(v[0]), mpq(v[1])))
            import functools

            ordered = sorted(dirs, key=functools.cmp_to_key(_angle_key_cmp))
            verts = tuple(
                add(center, scale(d, self._rational(1, 40, dens=(4, 5, 6, 7))))
                for d in ordered
            )
            curve = PolyCurve(verts)
            if validate_generic(curve).ok and not self_crossings(curve):
                return curve if self.rng.random() < 0.5 else curve.reverse()
        raise CurvesumError("star polygon sampling exhausted")

    # -- pairs ---------------------------------------------------------------

    def _shared_edge_direction(self, c0: PolyCurve, c1: PolyCurve) -> bool:
        dirs0 = [c0.edge_dir(i) for i in range(c0.n)]
        return any(
            cross(d0, c1.edge_dir(j)) == 0 for d0 in dirs0 for j in range(c1.n)
        )

    def pair(self, *, d_max: Optional[int] = None, overlap: Optional[bool] = None,
             for_simulation: bool = False) -> PairInstance:
        for _ in range(400):
            c0, l0 = self.piece(d_max)
            c1, l1 = self.piece(d_max)
            if not validate_general_position(c0, c1).ok:
                continue
            if for_simulation:
                if self._shared_edge_direction(c0, c1):
                    continue
                # Some pairs carry translation-invariant contact-time
                # coincidences and reject (almost) every direction; demand
                # that most of the probe fan sweeps generically.
                if count_generic_directions(c0, c1) < 12:
                    continue
            if overlap is True and not mutual_crossings(c0, c1):
                continue
            if overlap is False and mutual_crossings(c0, c1):
                continue
            return PairInstance(c0, l0, c1, l1)
        raise CurvesumError("pair sampling exhausted")

    def separated_pair(self, d_max: Optional[int] = None) -> PairInstance:
        for _ in range(400):
            c0, l0 = self.piece(d_max)
            c1, l1 = self.piece(d_max)
            x0, y0, x1, y1 = c0.bbox()
            a0, b0v, a1, b1v = c1.bbox()
            gap = (x1 - a0) + (self.rng.randint(2, 20))
            c1 = c1.translate((gap, self._rational(-10, 10)))
            if not validate_general_position(c0, c1).ok:
                continue
            if not separated(c0, c1):
                continue
            return PairInstance(c0, l0, c1, l1)
        raise CurvesumError("separated pair sampling exhausted")

    def simple_overlapping_pair(self) -> Tuple[PolyCurve, PolyCurve]:
        """Two simple star polygons in general position that are not
        separated (for the polygon-decomposition identity)."""
        for _ in range(400):
            c0 = self.star_polygon()
            c1 = self.star_polygon()
            if not validate_general_position(c0, c1).ok:
                continue
            if separated(c0, c1):
                continue
            return c0, c1
        raise CurvesumError("overlapping simple pair sampling exhausted")

    # -- bridges ------------------------------------------------------------

    _LOOP = ((mpq(6), mpq(1)), (mpq(5), mpq(4)), (mpq(2), mpq(-2)))

    def _bridge_interior(self, b0: Point, b1: Point, want_loop: bool) -> Tuple[Point, ...]:
        d = sub(b1, b0)
        pts: List[Point] = []
        k = self.rng.randint(0, 3)
        for i in range(1, k + 1):
            t = mpq(i, k + 1) + self._rational(-1, 1, dens=(11, 13, 17))
            jitter = (self._rational(-12, 12, dens=(3, 5, 7)),
                      self._rational(-12, 12, dens=(3, 5, 7)))
            pts.append(add(add(b0, scale(d, t)), jitter))
        if want_loop:
            at = self.rng.randint(0, len(pts))
            anchor = pts[at - 1] if at > 0 else b0
            sc = self._rational(1, 9, dens=(2, 3, 4))
            flip = self.rng.choice((1, -1))
            loop = [
                add(anchor, (sc * p[0], flip * sc * p[1])) for p in self._LOOP
            ]
            pts[at:at] = loop
        return tuple(pts)

    def bridge(self, c0: PolyCurve, c1: PolyCurve, *,
               plain: bool = False, straight: bool = False,
               loops: bool = True) -> Bridge:
        from .sums import bridge_stats  # local import: sums imports nothing from here

        for _ in range(600):
            loc0 = CurveLocation(self.rng.randrange(c0.n),
                                 mpq(self.rng.randint(1, 22), 23))
            loc1 = CurveLocation(self.rng.randrange(c1.n),
                                 mpq(self.rng.randint(1, 22), 23))
            b0 = c0.point_at(loc0)
            b1 = c1.point_at(loc1)
            if plain or straight:
                interior: Tuple[Point, ...] = ()
            else:
                want_loop = loops and self.rng.random() < 0.4
                interior = self._bridge_interior(b0, b1, want_loop)
            br = Bridge(loc0, loc1, interior)
            if not validate_bridge(br, c0, c1).ok:
                continue
            stats = bridge_stats(c0, c1, br)
            if stats.n_gamma > self.spec.g_max:
                continue
            if stats.interior_count > self.spec.x_max:
                continue
            if plain and (stats.n_gamma or stats.interior):
                continue
            return br
        raise CurvesumError("bridge sampling exhausted")

    def bridged_instance(self, *, separated_pair: bool = False,
                         plain: bool = False,
                         d_max: Optional[int] = None,
                         for_simulation: bool = False) -> BridgedInstance:
        for _ in range(60):
            if separated_pair:
                p = self.separated_pair(d_max)
            else:
                p = self.pair(d_max=d_max, for_simulation=for_simulation)
            try:
                br = self.bridge(p.c0, p.c1, plain=plain)
            except CurvesumError:
                continue
            return BridgedInstance(p.c0, p.l0, p.c1, p.l1, br)
        raise CurvesumError("bridged instance sampling exhausted")

    # -- arcs ---------------------------------------------------------------

    def arc_instance(self) -> Tuple[PolyCurve, Tuple[Point, ...]]:
        """A curve and a polyline arc starting on it (off the double
        points) and ending off it, crossing transversely in between."""
        from .arrangement import arc_crossing_tally

        for _ in range(400):
            curve, _ledger = self.piece()
            loc = CurveLocation(self.rng.randrange(curve.n),
                                mpq(self.rng.randint(1, 22), 23))
            start = curve.point_at(loc)
            pts = [start]
            for _ in range(self.rng.randint(1, 4)):
                pts.append(
                    add(pts[-1], (self._rational(-25, 25, dens=(2, 3, 5, 7)),
                                  self._rational(-25, 25, dens=(2, 3, 5, 7))))
                )
            if pts[-1] == pts[0]:
                continue
            try:
                arc_crossing_tally(pts, curve)
            except CurvesumError:
                continue
            return curve, tuple(pts)
        raise CurvesumError("arc sampling exhausted")
