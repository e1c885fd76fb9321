"""Base-pointed traversal bookkeeping: double-point signs, the splice
decomposition into simple closed curves, and the polygon decomposition
of the intersection of two disks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from . import geom
from .arrangement import Arrangement, winding
from .curves import (
    Crossing,
    CurveLocation,
    PolyCurve,
    mutual_crossings,
    self_crossings,
    validate_generic,
)
from .errors import BaseOnDoublePoint, GenericityError, NotSimple
from .geom import Point, cross_sign, sq_dist, sq_dist_point_segment, sub


def e_sign(curve: PolyCurve, base: CurveLocation, crossing: Crossing) -> int:
    """Sign of the ordered pair of branch directions at a double point,
    ordered by first visit when traversing from the base location."""
    base_pt = curve.point_at(base)
    if base_pt == crossing.point:
        raise BaseOnDoublePoint("base location coincides with the double point")
    n = curve.n
    gb = curve.global_param(base)
    branches = sorted(
        (crossing.branch1, crossing.branch2),
        key=lambda br: (mpq(br.edge) + br.t - gb) % n,
    )
    return cross_sign(branches[0].direction, branches[1].direction)


# ---------------------------------------------------------------------------
# Splice


def _feature_clearance_sq(curve: PolyCurve, crossings: Sequence[Crossing],
                          context: Sequence[PolyCurve]) -> Dict[int, mpq]:
    """Per-crossing squared clearance: distance to every vertex, every
    non-incident edge, and every other crossing, over the curve and any
    context curves."""
    out: Dict[int, mpq] = {}
    all_curves = [curve, *context]
    for idx, cr in enumerate(crossings):
        p = cr.point
        best: Optional[mpq] = None

        def consider(d2: mpq) -> None:
            nonlocal best
            if d2 > 0 and (best is None or d2 < best):
                best = d2

        for other_idx, other in enumerate(crossings):
            if other_idx != idx:
                consider(sq_dist(p, other.point))
        incident = {(0, cr.branch1.edge), (0, cr.branch2.edge)}
        for ci, c in enumerate(all_curves):
            for v in c.vertices:
                consider(sq_dist(p, v))
            for ei, a, b in c.edges():
                if (ci, ei) in incident:
                    continue
                consider(sq_dist_point_segment(p, a, b))
        assert best is not None
        out[idx] = best
    return out


def _param_offset(radius_sq: mpq, edge_len_sq: mpq) -> mpq:
    """A rational parameter step whose Euclidean travel stays below the
    (irrational) radius: min(1, r^2/L^2) <= sqrt(r^2/L^2) when <= 1."""
    q = radius_sq / edge_len_sq
    return q if q < 1 else mpq(1, 2)


def splice(curve: PolyCurve, context: Sequence[PolyCurve] = ()) -> List[PolyCurve]:
    """Smooth every double point respecting orientation; the result is a
    list of pairwise disjoint simple closed curves.

    The rerouting corners sit on the branch stubs at a quarter of the
    local clearance radius, so in a two-curve context the crossings with
    any context curve are untouched.
    """
    report = validate_generic(curve)
    if not report.ok:
        raise GenericityError(report.violations[0].detail)
    crossings = self_crossings(curve)
    if not crossings:
        return [curve]
    clearance = _feature_clearance_sq(curve, crossings, context)
    shrink = mpq(1, 16)  # start at (clearance/4)^2
    for _ in range(20):
        comps = _splice_once(curve, crossings, clearance, shrink)
        if comps is not None and _splice_valid(comps, curve, context):
            return comps
        shrink /= 4
    raise GenericityError("splice clearance search exhausted")


def _splice_once(curve, crossings, clearance, shrink):
    n = curve.n
    # Each crossing contributes two passes; order passes along the curve.
    passes = []  # (global param, crossing idx, branch)
    for idx, cr in enumerate(crossings):
        for br in (cr.branch1, cr.branch2):
            passes.append((mpq(br.edge) + br.t, idx, br))
    passes.sort(key=lambda rec: rec[0])
    npass = len(passes)
    pass_of = {}
    for k, (gp, idx, br) in enumerate(passes):
        pass_of.setdefault(idx, []).append(k)
    partner = [0] * npass
    for idx, (k1, k2) in pass_of.items():
        partner[k1], partner[k2] = k2, k1

    def stub(k: int, forward: bool) -> Optional[Point]:
        gp, idx, br = passes[k]
        a, b = curve.edge(br.edge)
        eps = _param_offset(clearance[idx] * shrink, sq_dist(a, b))
        t = br.t + eps if forward else br.t - eps
        if not (0 < t < 1):
            return None
        return geom.lerp(a, b, t)

    def path_between(k: int, j: int) -> Optional[List[Point]]:
        """Exit stub of pass k, original vertices, entry stub of pass j."""
        p0 = stub(k, True)
        p1 = stub(j, False)
        if p0 is None or p1 is None:
            return None
        g0, g1 = passes[k][0], passes[j][0]
        pts = [p0]
        e = passes[k][2].edge
        steps = (passes[j][2].edge - e) % n
        if g1 <= g0:
            steps = steps if steps > 0 else n
        for s in range(1, steps + 1):
            pts.append(curve.vertices[(e + s) % n])
        pts.append(p1)
        return pts

    visited = [False] * npass
    comps: List[PolyCurve] = []
    for k0 in range(npass):
        if visited[k0]:
            continue
        pts: List[Point] = []
        k = k0
        while True:
            visited[k] = True
            j = _next_pass(passes, k)
            seg = path_between(k, j)
            if seg is None:
                return None
            pts.extend(seg)
            k = partner[j]
            if k == k0:
                break
        comps.append(PolyCurve(tuple(pts)))
    return comps


def _next_pass(passes, k: int) -> int:
    return (k + 1) % len(passes)


def _splice_valid(comps, curve, context) -> bool:
    for c in comps:
        rep = validate_generic(c)
        if not rep.ok:
            return False
        try:
            if self_crossings(c):
                return False
        except GenericityError:
            return False
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            for _, a, b in comps[i].edges():
                for _, c, d in comps[j].edges():
                    if geom.segment_intersection(a, b, c, d) is not None:
                        return False
    # Crossings with context curves must be exactly preserved.
    for other in context:
        want = sorted(cr.point for cr in mutual_crossings(curve, other))
        got = []
        for c in comps:
            got.extend(cr.point for cr in mutual_crossings(c, other))
        if sorted(got) != want:
            return False
    return True


# ---------------------------------------------------------------------------
# Disk intersection polygons


@dataclass(frozen=True)
class PolygonComponent:
    component_id: int
    k: int
    boundary: Tuple[Point, ...]


def is_simple(curve: PolyCurve) -> bool:
    return not self_crossings(curve)


def disk_intersection_components(c0: PolyCurve, c1: PolyCurve) -> List[PolygonComponent]:
    """Connected components of the intersection of the two closed disks
    bounded by simple curves; each is a face of the pair arrangement whose
    boundary alternates 2k times between the two curves."""
    for c in (c0, c1):
        if not is_simple(c):
            raise NotSimple("disk decomposition needs simple closed curves")
    arr = Arrangement([c0, c1])
    crossing_points = {cr.point for cr in arr.crossings if cr.mutual}
    out: List[PolygonComponent] = []
    total_corners = 0
    for face in arr.faces:
        if not face.bounded:
            continue
        w0, w1 = face.winding
        if abs(w0) == 1 and abs(w1) == 1:
            corners = arr.boundary_crossing_corners(face)
            assert corners % 2 == 0
            total_corners += corners
            boundary = tuple(
                p for p in (arr.vertices[v] for v in face.cycle_vertices)
                if p in crossing_points
            )
            assert len(boundary) == corners
            out.append(PolygonComponent(len(out), corners // 2, boundary))
    m = sum(1 for cr in arr.crossings if cr.mutual)
    assert total_corners == m, "polygon corners must account for every crossing"
    return out


def separated(c0: PolyCurve, c1: PolyCurve) -> bool:
    """True iff each curve lies in the unbounded region of the other."""
    if mutual_crossings(c0, c1):
        return False
    a1 = Arrangement([c1])
    if a1.face_of_point(c0.vertices[0]).bounded:
        return False
    a0 = Arrangement([c0])
    return not a0.face_of_point(c1.vertices[0]).bounded
