"""Bridges between two curves: compatible orientations, the statistics a
bridge induces (endpoint vectors, interior crossings and their signs,
regions of the complement), classification of the sum, and explicit
polyline constructions of the sum curve and of the finger-pushed curve
that absorbs the bridge interior into the first summand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .arrangement import Arrangement, ind_v, winding
from .combinatorics import separated
from .curves import (
    Bridge,
    CurveLocation,
    PolyCurve,
    mutual_crossings,
    self_crossings,
    validate_bridge,
    validate_general_position,
    validate_generic,
)
from .errors import BridgeInvalid, ConstructionDegenerate, GenericityError
from .geom import (
    Point,
    add,
    cross,
    cross_sign,
    dot,
    lerp,
    neg,
    on_segment,
    scale,
    segment_intersection,
    sq_dist,
    sq_dist_point_segment,
    sub,
)


def reverse_location(curve: PolyCurve, loc: CurveLocation) -> CurveLocation:
    """The location of the same point on the reversed curve."""
    return CurveLocation((curve.n - 2 - loc.edge) % curve.n, 1 - loc.t)


@dataclass(frozen=True)
class OrientedPair:
    """Both curves oriented compatibly with the bridge (the endpoint
    vector of the bridge and the tangent of the host curve form a
    positive frame at each attachment)."""

    c0: PolyCurve
    c1: PolyCurve
    loc0: CurveLocation
    loc1: CurveLocation
    flipped0: bool
    flipped1: bool


def _endpoint_vectors(poly: Sequence[Point]) -> Tuple[Point, Point]:
    v0 = sub(poly[1], poly[0])
    v1 = neg(sub(poly[-1], poly[-2]))
    return v0, v1


def compatible_orientations(c0: PolyCurve, c1: PolyCurve, bridge: Bridge) -> OrientedPair:
    poly = bridge.polyline(c0, c1)
    v0, v1 = _endpoint_vectors(poly)
    out = []
    for c, loc, v in ((c0, bridge.start, v0), (c1, bridge.end, v1)):
        tangent = c.edge_dir(loc.edge)
        s = cross_sign(v, tangent)
        if s == 0:
            raise BridgeInvalid("bridge is tangent to a curve at an endpoint")
        if s > 0:
            out.append((c, loc, False))
        else:
            out.append((c.reverse(), reverse_location(c, loc), True))
    (a0, l0, f0), (a1, l1, f1) = out
    return OrientedPair(a0, a1, l0, l1, f0, f1)


@dataclass(frozen=True)
class InteriorCrossing:
    """A transverse crossing of the open bridge with one of the curves."""

    point: Point
    curve_id: int
    bridge_param: mpq  # segment index + local parameter, strictly increasing
    location: CurveLocation
    s: int  # +1 if the curve points to the same side of the bridge as at
    #         its attachment on that curve, else -1


@dataclass(frozen=True)
class BridgeStats:
    oriented: OrientedPair
    b0: Point
    b1: Point
    v0: Point
    v1: Point
    n_gamma: int
    interior: Tuple[InteriorCrossing, ...]  # ordered by bridge parameter
    ind_v0: int  # index of C0 at b0 in direction v0
    ind_v1: int
    ind_r0_v0: int  # same tangent vector, region of C0's complement holding b1
    ind_r1_v1: int

    @property
    def interior_count(self) -> int:
        return len(self.interior)

    def crossings_with(self, curve_id: int) -> Tuple[InteriorCrossing, ...]:
        return tuple(x for x in self.interior if x.curve_id == curve_id)


def _gamma_self_crossings(poly: Sequence[Point]) -> int:
    n = 0
    m = len(poly) - 1
    for i in range(m):
        for j in range(i + 2, m):
            hit = segment_intersection(poly[i], poly[i + 1], poly[j], poly[j + 1])
            if hit is not None and hit.kind == "transverse":
                n += 1
    return n


def bridge_stats(c0: PolyCurve, c1: PolyCurve, bridge: Bridge) -> BridgeStats:
    report = validate_bridge(bridge, c0, c1)
    report.raise_if_failed(BridgeInvalid)
    oriented = compatible_orientations(c0, c1, bridge)
    poly = bridge.polyline(c0, c1)
    v0, v1 = _endpoint_vectors(poly)
    b0, b1 = poly[0], poly[-1]
    curves = (oriented.c0, oriented.c1)
    locs = (oriented.loc0, oriented.loc1)
    sigma_b = [
        cross_sign(v, c.edge_dir(loc.edge))
        for c, loc, v in zip(curves, locs, (v0, v1))
    ]
    assert sigma_b == [1, 1]
    # The side comparison along the bridge must use one consistent
    # co-orientation.  Traversed from b0 to b1 the bridge leaves b0 along
    # v0 but arrives at b1 along -v1, so the reference sign at b1 flips.
    sigma_ref = (sigma_b[0], -sigma_b[1])

    interior: List[InteriorCrossing] = []
    for ci, c in enumerate(curves):
        for k in range(len(poly) - 1):
            a, b = poly[k], poly[k + 1]
            gdir = sub(b, a)
            for ei, p, q in c.edges():
                hit = segment_intersection(a, b, p, q)
                if hit is None:
                    continue
                if hit.kind != "transverse":
                    # attachment contacts at the open ends were already
                    # vetted by validate_bridge
                    continue
                if (k == 0 and hit.t1 == 0) or (k == len(poly) - 2 and hit.t1 == 1):
                    continue
                sigma_x = cross_sign(gdir, c.edge_dir(ei))
                interior.append(
                    InteriorCrossing(
                        point=hit.point,
                        curve_id=ci,
                        bridge_param=mpq(k) + hit.t1,
                        location=CurveLocation(ei, hit.t2),
                        s=sigma_x * sigma_ref[ci],
                    )
                )
    interior.sort(key=lambda x: x.bridge_param)

    return BridgeStats(
        oriented=oriented,
        b0=b0,
        b1=b1,
        v0=v0,
        v1=v1,
        n_gamma=_gamma_self_crossings(poly),
        interior=tuple(interior),
        ind_v0=ind_v(oriented.c0, oriented.loc0, v0),
        ind_v1=ind_v(oriented.c1, oriented.loc1, v1),
        # with compatible orientations the frame sign at each endpoint is +1,
        # so the index over the region holding the far endpoint is a winding
        ind_r0_v0=winding(oriented.c0, b1),
        ind_r1_v1=winding(oriented.c1, b0),
    )


@dataclass(frozen=True)
class SumClass:
    is_connected_sum: bool
    is_strange_sum: bool
    plain_bridge: bool  # embedded bridge whose interior misses both curves


def classify(c0: PolyCurve, c1: PolyCurve, bridge: Bridge,
             stats: Optional[BridgeStats] = None) -> SumClass:
    if stats is None:
        stats = bridge_stats(c0, c1, bridge)
    plain = stats.n_gamma == 0 and not stats.interior
    sep = separated(c0, c1)
    return SumClass(
        is_connected_sum=sep and plain,
        is_strange_sum=sep,
        plain_bridge=plain,
    )


# ---------------------------------------------------------------------------
# Construction of the sum curve


def _merge_collinear(poly: Sequence[Point]) -> List[Point]:
    """Drop interior joints where consecutive segments continue straight on,
    so every remaining joint has a genuine miter."""
    pts = [poly[0]]
    for k in range(1, len(poly) - 1):
        u = sub(poly[k], pts[-1])
        v = sub(poly[k + 1], poly[k])
        if cross(u, v) == 0 and dot(u, v) > 0:
            continue
        pts.append(poly[k])
    pts.append(poly[-1])
    return pts


def _line_intersection(a0: Point, d0: Point, a1: Point, d1: Point) -> Optional[Point]:
    den = cross(d0, d1)
    if den == 0:
        return None
    t = cross(sub(a1, a0), d1) / den
    return add(a0, scale(d0, t))


def _offset_chain(poly: Sequence[Point], side: int, delta: mpq) -> Optional[List[Point]]:
    """Mitered polyline parallel to ``poly`` on the given side (+1 left of
    the oriented segments).  Each segment is pushed along its normal by a
    rational amount at most ``delta``; returns None on a degenerate miter."""
    segs = []
    for k in range(len(poly) - 1):
        a, b = poly[k], poly[k + 1]
        d = sub(b, a)
        len2 = dot(d, d)
        mu = min(mpq(1), delta * delta * len2) * side
        # the offset line is {x : cross(d, x - a) == mu}; shift the anchor
        normal = (-d[1], d[0])
        anchor = add(a, scale(normal, mu / len2))
        segs.append((anchor, d))
    chain: List[Point] = []
    for k in range(len(segs) - 1):
        p = _line_intersection(*segs[k], *segs[k + 1])
        if p is None:
            return None
        chain.append(p)
    return chain


def _offset_segments(poly: Sequence[Point], side: int, delta: mpq):
    segs = []
    for k in range(len(poly) - 1):
        a, b = poly[k], poly[k + 1]
        d = sub(b, a)
        len2 = dot(d, d)
        mu = min(mpq(1), delta * delta * len2) * side
        normal = (-d[1], d[0])
        anchor = add(a, scale(normal, mu / len2))
        segs.append((anchor, d))
    return segs


def _attachment(seg, curve: PolyCurve, loc: CurveLocation) -> Optional[Tuple[Point, mpq]]:
    """Intersection of an offset line with the host edge, as a point and an
    edge parameter; None if it misses the open edge."""
    a, b = curve.edge(loc.edge)
    p = _line_intersection(seg[0], seg[1], a, sub(b, a))
    if p is None:
        return None
    d = sub(b, a)
    t = (dot(sub(p, a), d)) / dot(d, d)
    if not (0 < t < 1):
        return None
    return p, t


def _long_way(curve: PolyCurve, edge: int, t_from: mpq, t_to: mpq,
              p_from: Point, p_to: Point) -> List[Point]:
    """Path along the curve from one point of an edge to another of the
    same edge, going around the curve rather than along the short gap."""
    n = curve.n
    pts = [p_from]
    if t_from > t_to:
        # leave through the head of the edge, with the orientation
        for s in range(1, n + 1):
            pts.append(curve.vertices[(edge + s) % n])
    else:
        # leave through the tail, against the orientation
        for s in range(0, n):
            pts.append(curve.vertices[(edge - s) % n])
    pts.append(p_to)
    return pts


def _global_clearance_sq(c0: PolyCurve, c1: PolyCurve, poly: Sequence[Point]) -> mpq:
    """Minimum positive squared distance between any two features (vertices,
    crossing points, non-incident edges) of the configuration."""
    pts: List[Point] = list(poly)
    segs: List[Tuple[Point, Point]] = []
    for c in (c0, c1):
        pts.extend(c.vertices)
        for _, a, b in c.edges():
            segs.append((a, b))
        for cr in self_crossings(c):
            pts.append(cr.point)
    for cr in mutual_crossings(c0, c1):
        pts.append(cr.point)
    for k in range(len(poly) - 1):
        segs.append((poly[k], poly[k + 1]))
    best: Optional[mpq] = None
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d2 = sq_dist(pts[i], pts[j])
            if d2 > 0 and (best is None or d2 < best):
                best = d2
        for a, b in segs:
            if on_segment(pts[i], a, b):
                continue
            d2 = sq_dist_point_segment(pts[i], a, b)
            if d2 > 0 and (best is None or d2 < best):
                best = d2
    assert best is not None
    return best


def _initial_delta(clear_sq: mpq) -> mpq:
    """A rational delta with delta <= sqrt(clear_sq)/4."""
    return min(mpq(1, 4), clear_sq / 16)


def expected_double_points(d0: int, d1: int, m: int, interior: int, n_gamma: int) -> int:
    return d0 + d1 + m + 2 * interior + 4 * n_gamma


@dataclass(frozen=True)
class SumConstruction:
    curve: PolyCurve
    delta: mpq
    double_points: int


def construct_sum(c0: PolyCurve, c1: PolyCurve, bridge: Bridge) -> SumConstruction:
    """Polyline realization of the generalized connected sum: remove a small
    interval of each curve around its attachment and join the four loose
    ends by two parallel copies of the bridge."""
    report = validate_bridge(bridge, c0, c1)
    report.raise_if_failed(BridgeInvalid)
    poly = _merge_collinear(bridge.polyline(c0, c1))
    d0 = len(self_crossings(c0))
    d1 = len(self_crossings(c1))
    m = len(mutual_crossings(c0, c1))
    stats = bridge_stats(c0, c1, bridge)
    want = expected_double_points(d0, d1, m, stats.interior_count, stats.n_gamma)

    delta = _initial_delta(_global_clearance_sq(c0, c1, poly))
    for _ in range(20):
        built = _assemble_sum(c0, c1, bridge, poly, delta)
        if built is not None:
            rep = validate_generic(built)
            if rep.ok and len(self_crossings(built)) == want:
                return SumConstruction(built, delta, want)
        delta /= 2
    raise ConstructionDegenerate("no offset width yields a generic sum curve")


def _assemble_sum(c0: PolyCurve, c1: PolyCurve, bridge: Bridge,
                  poly: Sequence[Point], delta: mpq) -> Optional[PolyCurve]:
    sides = {}
    for side in (+1, -1):
        segs = _offset_segments(poly, side, delta)
        att0 = _attachment(segs[0], c0, bridge.start)
        att1 = _attachment(segs[-1], c1, bridge.end)
        chain = _offset_chain(poly, side, delta)
        if att0 is None or att1 is None or chain is None:
            return None
        sides[side] = (att0, att1, chain)
    (a0L, t0L), (a1L, t1L), chainL = sides[+1]
    (a0R, t0R), (a1R, t1R), chainR = sides[-1]

    pts: List[Point] = []
    pts.append(a0L)
    pts.extend(chainL)
    pts.append(a1L)
    pts.extend(_long_way(c1, bridge.end.edge, t1L, t1R, a1L, a1R)[1:])
    pts.extend(reversed(chainR))
    pts.append(a0R)
    pts.extend(_long_way(c0, bridge.start.edge, t0R, t0L, a0R, a0L)[1:-1])
    return PolyCurve(tuple(pts))


# ---------------------------------------------------------------------------
# Pushing the first curve along the bridge (finger move)


@dataclass(frozen=True)
class AppendixConstruction:
    curve0: PolyCurve  # C0 with a finger pushed along the bridge
    bridge: Bridge  # the residual straight bridge from the finger tip to C1
    delta: mpq
    cap_point: Point


def push_appendix(c0: PolyCurve, c1: PolyCurve, bridge: Bridge) -> AppendixConstruction:
    """Deform the first curve along the bridge past every bridge feature
    (interior crossings and bridge self-crossings), leaving a residual
    bridge whose interior is disjoint from both curves and embedded."""
    report = validate_bridge(bridge, c0, c1)
    report.raise_if_failed(BridgeInvalid)
    poly = _merge_collinear(bridge.polyline(c0, c1))
    nseg = len(poly) - 1
    # latest feature parameter on the last bridge segment
    t_max = mpq(0)
    a, b = poly[-2], poly[-1]
    for k in range(nseg - 1):
        hit = segment_intersection(poly[k], poly[k + 1], a, b)
        if hit is not None and hit.kind == "transverse":
            t_max = max(t_max, hit.t2)
    for c in (c0, c1):
        for _, p, q in c.edges():
            hit = segment_intersection(a, b, p, q)
            if hit is not None and hit.kind == "transverse" and hit.t1 < 1:
                t_max = max(t_max, hit.t1)
    t_cap = (t_max + 1) / 2
    cap_pt = lerp(a, b, t_cap)

    delta = _initial_delta(_global_clearance_sq(c0, c1, poly))
    for _ in range(20):
        built = _assemble_appendix(c0, c1, bridge, poly, delta, cap_pt)
        if built is not None and _appendix_valid(built, c0, c1, bridge):
            return built
        delta /= 2
    raise ConstructionDegenerate("no finger width yields a generic pushed curve")


def _assemble_appendix(c0, c1, bridge, poly, delta, cap_pt) -> Optional[AppendixConstruction]:
    sides = {}
    d_last = sub(poly[-1], poly[-2])
    len2_last = dot(d_last, d_last)
    for side in (+1, -1):
        segs = _offset_segments(poly, side, delta)
        att0 = _attachment(segs[0], c0, bridge.start)
        chain = _offset_chain(poly, side, delta)
        if att0 is None or chain is None:
            return None
        mu = min(mpq(1), delta * delta * len2_last) * side
        cap_corner = add(cap_pt, scale((-d_last[1], d_last[0]), mu / len2_last))
        sides[side] = (att0, chain, cap_corner)
    (a0L, t0L), chainL, capL = sides[+1]
    (a0R, t0R), chainR, capR = sides[-1]

    pts: List[Point] = [a0L]
    pts.extend(chainL)
    pts.append(capL)
    pts.append(capR)
    pts.extend(reversed(chainR))
    pts.append(a0R)
    pts.extend(_long_way(c0, bridge.start.edge, t0R, t0L, a0R, a0L)[1:-1])
    curve = PolyCurve(tuple(pts))

    cap_edge = len(chainL) + 1  # edge capL -> capR
    assert curve.vertices[cap_edge] == capL and curve.vertices[cap_edge + 1] == capR
    residual = Bridge(
        start=CurveLocation(cap_edge, mpq(1, 2)),
        end=bridge.end,
        interior=(),
    )
    return AppendixConstruction(curve, residual, delta, cap_pt)


def _appendix_valid(built: AppendixConstruction, c0, c1, bridge) -> bool:
    if not validate_generic(built.curve0).ok:
        return False
    if not validate_general_position(built.curve0, c1).ok:
        return False
    if not validate_bridge(built.bridge, built.curve0, c1).ok:
        return False
    stats = bridge_stats(built.curve0, c1, built.bridge)
    if stats.n_gamma != 0 or stats.interior:
        return False
    # feature bookkeeping of the finger move
    old = bridge_stats(c0, c1, bridge)
    d_new = len(self_crossings(built.curve0))
    d_old = len(self_crossings(c0))
    hits0 = len(old.crossings_with(0))
    if d_new != d_old + 2 * hits0 + 4 * old.n_gamma:
        return False
    m_new = len(mutual_crossings(built.curve0, c1))
    m_old = len(mutual_crossings(c0, c1))
    return m_new == m_old + 2 * len(old.crossings_with(1))
