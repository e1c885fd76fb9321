"""Curve and bridge data model: polyline curves, genericity validation,
and the standard curves with rotation number n.

A closed oriented curve is a polyline whose vertex order fixes the
orientation; the edge from the last vertex back to the first closes it.
Corners stand in for a smoothed curve: validation rejects every
tangential or degenerate contact, so all static double points are
transverse crossings of edge interiors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from gmpy2 import mpq

from . import geom
from .errors import GenericityError
from .geom import (
    ENDPOINT,
    OVERLAP,
    TRANSVERSE,
    Point,
    Vector,
    cross,
    dot,
    pt,
    segment_intersection,
    sub,
)


class CurveLocation(NamedTuple):
    """A point on a curve: edge index plus rational parameter in [0, 1)."""

    edge: int
    t: mpq


@dataclass(frozen=True)
class PolyCurve:
    """Closed oriented polyline with exact rational vertices."""

    vertices: Tuple[Point, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise GenericityError("a closed curve needs at least 3 vertices")

    @staticmethod
    def from_coords(coords: Sequence[Tuple]) -> "PolyCurve":
        return PolyCurve(tuple(pt(x, y) for x, y in coords))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge(self, i: int) -> Tuple[Point, Point]:
        i %= self.n
        return self.vertices[i], self.vertices[(i + 1) % self.n]

    def edge_dir(self, i: int) -> Vector:
        a, b = self.edge(i)
        return sub(b, a)

    def edges(self) -> Iterator[Tuple[int, Point, Point]]:
        for i in range(self.n):
            a, b = self.edge(i)
            yield i, a, b

    def point_at(self, loc: CurveLocation) -> Point:
        a, b = self.edge(loc.edge)
        return geom.lerp(a, b, loc.t)

    def tangent_at(self, loc: CurveLocation) -> Vector:
        return self.edge_dir(loc.edge)

    def global_param(self, loc: CurveLocation) -> mpq:
        """Position along the curve in [0, n), monotone in the orientation."""
        return mpq(loc.edge % self.n) + loc.t

    def reverse(self) -> "PolyCurve":
        """Same image, opposite orientation."""
        return PolyCurve(tuple(reversed(self.vertices)))

    def translate(self, v: Vector) -> "PolyCurve":
        return PolyCurve(tuple(geom.add(p, v) for p in self.vertices))

    def transform(self, matrix: Tuple[mpq, mpq, mpq, mpq], shift: Vector) -> "PolyCurve":
        """Apply an affine map x -> M x + shift (M given row-major)."""
        a, b, c, d = matrix
        return PolyCurve(
            tuple((a * p[0] + b * p[1] + shift[0], c * p[0] + d * p[1] + shift[1])
                  for p in self.vertices)
        )

    def bbox(self) -> Tuple[mpq, mpq, mpq, mpq]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass(frozen=True)
class Branch:
    """One of the two passes of a curve through a crossing point."""

    curve: int
    edge: int
    t: mpq
    direction: Vector


@dataclass(frozen=True)
class Crossing:
    """A transverse double point, self (same curve) or mutual."""

    point: Point
    branch1: Branch
    branch2: Branch
    mutual: bool


@dataclass(frozen=True)
class Bridge:
    """Oriented polyline from a point of curve 0 to a point of curve 1.

    Attachment parameters must land strictly inside an edge so the
    host tangent is unambiguous.
    """

    start: CurveLocation
    end: CurveLocation
    interior: Tuple[Point, ...] = ()

    def polyline(self, c0: PolyCurve, c1: PolyCurve) -> List[Point]:
        return [c0.point_at(self.start), *self.interior, c1.point_at(self.end)]


@dataclass
class Violation:
    rule: str
    detail: str
    witness: tuple = ()


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, rule: str, detail: str, witness: tuple = ()) -> None:
        self.violations.append(Violation(rule, detail, witness))

    def raise_if_failed(self, exc_type: type = GenericityError) -> None:
        if not self.ok:
            first = self.violations[0]
            raise exc_type(f"{first.rule}: {first.detail}")


def _adjacent(i: int, j: int, n: int) -> bool:
    return (i + 1) % n == j or (j + 1) % n == i


def _pairwise_crossings(
    segs_a: Sequence[Tuple[int, Point, Point]],
    segs_b: Sequence[Tuple[int, Point, Point]],
    report: ValidationReport,
    same: bool,
    n: int = 0,
    label: str = "",
) -> List[Tuple[int, mpq, int, mpq, Point]]:
    """Collect transverse crossings between two edge sets, reporting any
    degenerate contact.  With same=True the sets are one closed curve's
    edges and adjacent pairs are skipped."""
    out = []
    for ai, (i, a1, b1) in enumerate(segs_a):
        bi0 = ai + 1 if same else 0
        for j, a2, b2 in segs_b[bi0:]:
            if same and (i == j or _adjacent(i, j, n)):
                continue
            hit = segment_intersection(a1, b1, a2, b2)
            if hit is None:
                continue
            if hit.kind == TRANSVERSE:
                out.append((i, hit.t1, j, hit.t2, hit.point))
            elif hit.kind == OVERLAP:
                report.add(f"{label}overlap", f"edges {i} and {j} overlap", (i, j))
            else:
                report.add(
                    f"{label}vertex-contact",
                    f"endpoint contact between edges {i} and {j}",
                    (i, j, hit.point),
                )
    return out


def _check_multiplicities(
    crossings: Sequence[Tuple], report: ValidationReport, label: str
) -> None:
    seen = {}
    for rec in crossings:
        p = rec[-1]
        seen.setdefault(p, []).append(rec)
    for p, recs in seen.items():
        if len(recs) > 1:
            report.add(
                f"{label}multiple-point",
                f"{len(recs) + 1} branches through one point",
                (p,),
            )


def validate_generic(curve: PolyCurve) -> ValidationReport:
    """Check that every self-intersection is a transverse crossing of two
    edge interiors, with no vertex contacts, overlaps, or triple points."""
    report = ValidationReport()
    n = curve.n
    for i in range(n):
        a, b = curve.edge(i)
        if a == b:
            report.add("repeated-vertex", f"edge {i} has zero length", (i,))
    if not report.ok:
        return report
    for i in range(n):
        d1 = curve.edge_dir(i)
        d2 = curve.edge_dir((i + 1) % n)
        if cross(d1, d2) == 0 and dot(d1, d2) < 0:
            report.add("doubled-back", f"edges {i},{(i + 1) % n} fold back", (i,))
    segs = list(curve.edges())
    crossings = _pairwise_crossings(segs, segs, report, same=True, n=n)
    _check_multiplicities(crossings, report, "")
    return report


def self_crossings(curve: PolyCurve, curve_id: int = 0) -> List[Crossing]:
    """All transverse self double points, as Crossing records.

    Raises GenericityError if the curve is not generic.
    """
    report = ValidationReport()
    segs = list(curve.edges())
    recs = _pairwise_crossings(segs, segs, report, same=True, n=curve.n)
    report.raise_if_failed()
    out = []
    for i, t1, j, t2, p in recs:
        out.append(
            Crossing(
                p,
                Branch(curve_id, i, t1, curve.edge_dir(i)),
                Branch(curve_id, j, t2, curve.edge_dir(j)),
                mutual=False,
            )
        )
    return out


def mutual_crossings(c0: PolyCurve, c1: PolyCurve) -> List[Crossing]:
    """All transverse crossings between two curves (curve ids 0 and 1)."""
    report = ValidationReport()
    segs0 = list(c0.edges())
    segs1 = list(c1.edges())
    recs = _pairwise_crossings(segs0, segs1, report, same=False)
    report.raise_if_failed()
    return [
        Crossing(
            p,
            Branch(0, i, t1, c0.edge_dir(i)),
            Branch(1, j, t2, c1.edge_dir(j)),
            mutual=True,
        )
        for i, t1, j, t2, p in recs
    ]


def validate_general_position(c0: PolyCurve, c1: PolyCurve) -> ValidationReport:
    """Two individually generic curves must meet only in transverse
    edge-interior crossings, away from all double points."""
    report = ValidationReport()
    segs0 = list(c0.edges())
    segs1 = list(c1.edges())
    recs = _pairwise_crossings(segs0, segs1, report, same=False, label="pair-")
    _check_multiplicities(recs, report, "pair-")
    if report.ok:
        doubles0 = {c.point for c in self_crossings(c0)}
        doubles1 = {c.point for c in self_crossings(c1)}
        for i, t1, j, t2, p in recs:
            if p in doubles0 or p in doubles1:
                report.add(
                    "pair-through-double-point",
                    "a mutual crossing hits a double point",
                    (p,),
                )
        # A double point of one curve sitting exactly on the other curve is
        # a triple contact even though no edge pair reports it.
        for doubles, segs in ((doubles0, segs1), (doubles1, segs0)):
            for p in doubles:
                for j, a, b in segs:
                    if geom.on_segment(p, a, b):
                        report.add(
                            "pair-double-point-on-curve",
                            "a double point lies on the other curve",
                            (p,),
                        )
                        break
    return report


def validate_bridge(bridge: Bridge, c0: PolyCurve, c1: PolyCurve) -> ValidationReport:
    """Bridge validity: endpoints on edge interiors away from crossings,
    transverse interior crossings only, no bridge double point on a curve,
    and the bridge itself generic."""
    report = ValidationReport()
    curves = (c0, c1)
    locs = (bridge.start, bridge.end)
    for i, (curve, loc) in enumerate(zip(curves, locs)):
        if not (0 < loc.t < 1):
            report.add(
                "endpoint-on-vertex",
                f"b{i} must lie strictly inside an edge",
                (i,),
            )
    if not report.ok:
        return report
    poly = bridge.polyline(c0, c1)
    if len(set(poly)) != len(poly):
        report.add("bridge-repeated-vertex", "bridge vertices repeat", ())
        return report
    gsegs = [(k, poly[k], poly[k + 1]) for k in range(len(poly) - 1)]
    # Bridge must not fold back on itself.
    for k in range(len(gsegs) - 1):
        d1 = sub(gsegs[k][2], gsegs[k][1])
        d2 = sub(gsegs[k + 1][2], gsegs[k + 1][1])
        if cross(d1, d2) == 0 and dot(d1, d2) < 0:
            report.add("bridge-doubled-back", f"bridge edges {k},{k + 1}", (k,))
    # Self-crossings of the bridge: transverse interior only.
    self_recs = []
    for k in range(len(gsegs)):
        for m in range(k + 2, len(gsegs)):
            if k == 0 and m == len(gsegs) - 1 and len(gsegs) == 2:
                continue
            hit = segment_intersection(
                gsegs[k][1], gsegs[k][2], gsegs[m][1], gsegs[m][2]
            )
            if hit is None:
                continue
            if hit.kind == TRANSVERSE:
                self_recs.append((k, hit.t1, m, hit.t2, hit.point))
            else:
                report.add(
                    "bridge-self-degenerate",
                    f"bridge edges {k},{m} touch degenerately",
                    (k, m),
                )
    _check_multiplicities(self_recs, report, "bridge-")
    # Crossings with the curves.
    doubles0 = [c.point for c in self_crossings(c0)]
    doubles1 = [c.point for c in self_crossings(c1)]
    curve_hits = []
    for ci, curve in enumerate(curves):
        b_loc = locs[ci]
        b_point = curve.point_at(b_loc)
        for k, ga, gb in gsegs:
            for j, a, b in curve.edges():
                hit = segment_intersection(ga, gb, a, b)
                if hit is None:
                    continue
                if hit.kind == TRANSVERSE:
                    curve_hits.append((ci, k, hit.t1, j, hit.t2, hit.point))
                elif hit.point == b_point:
                    # The attachment itself: must be transverse, i.e. the
                    # bridge end vector not parallel to the host edge.
                    gd = sub(gb, ga)
                    if cross(gd, curve.edge_dir(j)) == 0:
                        report.add(
                            "endpoint-tangential",
                            f"bridge tangent to curve {ci} at b{ci}",
                            (ci,),
                        )
                else:
                    report.add(
                        "bridge-curve-degenerate",
                        f"bridge edge {k} touches curve {ci} edge {j} degenerately",
                        (ci, k, j, hit.point),
                    )
    # Condition (1): bridge avoids the curves' double points.
    for p in doubles0 + doubles1:
        for k, ga, gb in gsegs:
            if geom.on_segment(p, ga, gb):
                report.add(
                    "bridge-through-double-point",
                    "bridge passes through a curve double point",
                    (p,),
                )
    # Condition (2): no bridge double point lies on a curve.
    for k, t1, m, t2, p in self_recs:
        for ci, curve in enumerate(curves):
            for j, a, b in curve.edges():
                if geom.on_segment(p, a, b):
                    report.add(
                        "bridge-double-point-on-curve",
                        "a bridge self-crossing lies on a curve",
                        (p,),
                    )
    # Interior crossings must not coincide with each other or attachments.
    _check_multiplicities(
        [(ci, k, t1, j, t2, p) for ci, k, t1, j, t2, p in curve_hits],
        report,
        "bridge-curve-",
    )
    return report


def reverse(curve: PolyCurve) -> PolyCurve:
    return curve.reverse()


def standard_curve(n: int) -> PolyCurve:
    """A polyline realization of the standard curve with rotation number n.

    n=0 is the figure eight (one double point); n=1 a convex loop; for
    n>=2 one large CCW convex loop carries n-1 small CCW loops attached
    along its bottom edge, giving n-1 double points and rotation +n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return PolyCurve.from_coords([(0, 0), (2, 2), (2, 0), (0, 2)])
    if n == 1:
        return PolyCurve.from_coords([(0, 0), (6, 0), (6, 6), (0, 6)])
    coords: List[Tuple[int, int]] = [(-4, 0)]
    for j in range(n - 1):
        b = 6 * j
        coords += [
            (b + 2, 0),
            (b + 2, 3),
            (b - 1, 3),
            (b - 1, 1),
            (b + 3, 1),
            (b + 3, 0),
        ]
    right = 6 * (n - 2) + 5
    coords += [(right, 0), (right, 6), (-4, 6)]
    return PolyCurve.from_coords(coords)
