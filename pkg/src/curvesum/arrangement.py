"""Planar subdivision, winding numbers, rotation numbers, and the index
quantities built on them.

Winding numbers are computed by exact ray casting: the ray direction is
re-chosen from a fixed deterministic sequence whenever it hits a vertex
or runs along an edge, so the input geometry is never perturbed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from . import geom
from .curves import (
    Crossing,
    CurveLocation,
    PolyCurve,
    mutual_crossings,
    self_crossings,
    validate_general_position,
    validate_generic,
)
from .errors import (
    DegenerateArc,
    GenericityError,
    PointOnCurve,
    TangentVector,
)
from .geom import Point, Vector, cross, cross_sign, orient, sign, sub


def _ray_directions() -> Iterator[Vector]:
    """Deterministic sequence of pairwise non-parallel rational directions."""
    yield (mpq(1), mpq(0))
    yield (mpq(0), mpq(1))
    k = 1
    while True:
        yield (mpq(1), mpq(k))
        yield (mpq(1), mpq(-k))
        yield (mpq(k), mpq(1 + k * k))
        k += 1


def _winding_of_loop(points: Sequence[Point], p: Point) -> int:
    """Winding number of a closed polygonal loop around p (p off the loop).

    Raises PointOnCurve if p lies on the loop.
    """
    n = len(points)
    for i in range(n):
        a, b = points[i], points[(i + 1) % n]
        if a == b:
            continue
        if geom.on_segment(p, a, b):
            raise PointOnCurve(f"point {p} lies on the loop")
    for d in _ray_directions():
        total = 0
        ok = True
        for i in range(n):
            a, b = points[i], points[(i + 1) % n]
            if a == b:
                continue
            e = sub(b, a)
            denom = cross(d, e)
            w = sub(a, p)
            if denom == 0:
                if cross(w, d) == 0:
                    ok = False  # edge collinear with the ray line
                    break
                continue
            s = cross(w, e) / denom
            t = cross(w, d) / denom
            if s <= 0:
                continue
            if t == 0 or t == 1:
                ok = False  # ray through a vertex
                break
            if 0 < t < 1:
                total += cross_sign(d, e)
        if ok:
            return total
    raise AssertionError("unreachable: ray directions exhausted")


def winding(curve: PolyCurve, p: Point) -> int:
    """Winding number of the oriented curve around p."""
    return _winding_of_loop(curve.vertices, p)


def rotation_number(curve: PolyCurve) -> int:
    """Degree of the direction map, computed exactly.

    The edge directions, joined in order, form a closed polygonal loop;
    its winding number around the origin is the total turning.  Chords
    between consecutive directions avoid the origin because validation
    rejects folded-back edges.
    """
    dirs = [curve.edge_dir(i) for i in range(curve.n)]
    return _winding_of_loop(dirs, (mpq(0), mpq(0)))


def probe_point(curve_edges: Sequence[Tuple[Point, Point]], x: Point, v: Vector) -> Point:
    """A point q = x + eps*v such that the open segment (x, q] is disjoint
    from all given edges; q then lies in the region pointed to by v."""
    eps = mpq(1)
    for _ in range(256):
        q = geom.add(x, geom.scale(v, eps))
        if _probe_clear(curve_edges, x, q):
            return q
        eps /= 2
    raise AssertionError("probe search exhausted")


def _probe_clear(curve_edges, x: Point, q: Point) -> bool:
    for a, b in curve_edges:
        if geom.on_segment(q, a, b):
            return False
        hit = geom.segment_intersection(x, q, a, b)
        if hit is not None and hit.point != x:
            return False
    return True


def _is_double_point(curve: PolyCurve, p: Point) -> bool:
    return any(c.point == p for c in self_crossings(curve))


def ind_v(curve: PolyCurve, x: CurveLocation, v: Vector) -> int:
    """Index of the unoriented curve at (x, v): winding of the v-compatible
    orientation over the region entered by a short step along v."""
    tangent = curve.tangent_at(x)
    sigma = cross_sign(v, tangent)
    if sigma == 0:
        raise TangentVector("v is parallel to the curve at x")
    xp = curve.point_at(x)
    if _is_double_point(curve, xp):
        raise GenericityError("base location is a double point")
    edges = [(a, b) for _, a, b in curve.edges()]
    q = probe_point(edges, xp, v)
    return sigma * winding(curve, q)


def ind_v_region(curve: PolyCurve, x: CurveLocation, v: Vector, region_point: Point) -> int:
    """Index of the v-compatible orientation over the region holding
    region_point."""
    tangent = curve.tangent_at(x)
    sigma = cross_sign(v, tangent)
    if sigma == 0:
        raise TangentVector("v is parallel to the curve at x")
    return sigma * winding(curve, region_point)


@dataclass(frozen=True)
class CrossingTally:
    l_plus: int
    l_minus: int


def arc_crossing_tally(arc: Sequence[Point], curve: PolyCurve) -> CrossingTally:
    """Classify the interior crossings of an arc with a curve by side sign.

    The arc starts on the curve (not at a double point) and ends off it.
    A crossing gets s=+1 when the curve points the same side of the arc
    there as it does at the arc's start.
    """
    arc = list(arc)
    if len(arc) < 2:
        raise DegenerateArc("arc needs at least two points")
    start = arc[0]
    base_tangent = None
    hits = []  # (sigma at crossing)
    for k in range(len(arc) - 1):
        ga, gb = arc[k], arc[k + 1]
        if ga == gb:
            raise DegenerateArc("zero-length arc segment")
        gd = sub(gb, ga)
        for j, a, b in curve.edges():
            hit = geom.segment_intersection(ga, gb, a, b)
            if hit is None:
                continue
            if hit.kind == geom.TRANSVERSE:
                hits.append(cross_sign(gd, sub(b, a)))
            elif hit.point == start and k == 0 and hit.t1 == 0:
                if cross(gd, sub(b, a)) == 0:
                    raise DegenerateArc("arc tangent to the curve at its start")
                base_tangent = sub(b, a)
            else:
                raise DegenerateArc("tangential or vertex contact")
    if base_tangent is None:
        raise DegenerateArc("arc does not start on the curve")
    sigma0 = cross_sign(sub(arc[1], arc[0]), base_tangent)
    l_plus = sum(1 for s in hits if s == sigma0)
    l_minus = len(hits) - l_plus
    return CrossingTally(l_plus, l_minus)


# ---------------------------------------------------------------------------
# DCEL arrangement


@dataclass
class RegionInfo:
    region_id: str
    winding: Tuple[int, ...]  # one entry per input curve orientation
    witness: Point
    bounded: bool
    cycle_vertices: Tuple[int, ...] = ()  # vertex ids along the outer cycle


def _angle_key_cmp(d1: Vector, d2: Vector) -> int:
    """Compare two directions by angle in [0, 2pi)."""
    h1 = 0 if (d1[1] > 0 or (d1[1] == 0 and d1[0] > 0)) else 1
    h2 = 0 if (d2[1] > 0 or (d2[1] == 0 and d2[0] > 0)) else 1
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = cross_sign(d1, d2)
    return -c


class Arrangement:
    """Planar subdivision of one or two generic curves.

    Exposes crossings, faces with per-curve winding numbers, and point
    location.  Construction is O(n^2) in the edge count.
    """

    def __init__(self, curves: Sequence[PolyCurve]):
        if not 1 <= len(curves) <= 2:
            raise GenericityError("arrangement takes one or two curves")
        for c in curves:
            rep = validate_generic(c)
            if not rep.ok:
                raise GenericityError(f"curve not generic: {rep.violations[0].detail}")
        if len(curves) == 2:
            rep = validate_general_position(curves[0], curves[1])
            if not rep.ok:
                raise GenericityError(
                    f"curves not in general position: {rep.violations[0].detail}"
                )
        self.curves: Tuple[PolyCurve, ...] = tuple(curves)
        self.crossings: List[Crossing] = []
        for ci, c in enumerate(self.curves):
            self.crossings.extend(self_crossings(c, ci))
        if len(self.curves) == 2:
            self.crossings.extend(mutual_crossings(self.curves[0], self.curves[1]))
        self._build()

    # -- construction -------------------------------------------------

    def _build(self) -> None:
        splits: Dict[Tuple[int, int], List[Tuple[mpq, Point]]] = {}
        for cr in self.crossings:
            for br in (cr.branch1, cr.branch2):
                splits.setdefault((br.curve, br.edge), []).append((br.t, cr.point))
        self._vid: Dict[Point, int] = {}
        self.vertices: List[Point] = []

        def vid_of(p: Point) -> int:
            i = self._vid.get(p)
            if i is None:
                i = len(self.vertices)
                self._vid[p] = i
                self.vertices.append(p)
            return i

        # Sub-edges in curve orientation order.
        self.subedges: List[Tuple[int, int, int]] = []  # (u, v, curve_id)
        for ci, c in enumerate(self.curves):
            for ei, a, b in c.edges():
                pts = [a]
                for t, p in sorted(splits.get((ci, ei), [])):
                    pts.append(p)
                pts.append(b)
                for u, v in zip(pts, pts[1:]):
                    if u != v:
                        self.subedges.append((vid_of(u), vid_of(v), ci))
        self.crossing_vids = {self._vid[cr.point] for cr in self.crossings}
        self.mutual_vids = {
            self._vid[cr.point] for cr in self.crossings if cr.mutual
        }

        # Half-edges: 2k is u->v of subedge k, 2k+1 its twin.
        nh = 2 * len(self.subedges)
        origin = [0] * nh
        for k, (u, v, ci) in enumerate(self.subedges):
            origin[2 * k] = u
            origin[2 * k + 1] = v
        self._origin = origin

        outgoing: Dict[int, List[int]] = {}
        for h in range(nh):
            outgoing.setdefault(origin[h], []).append(h)
        import functools

        def hdir(h: int) -> Vector:
            return sub(self.vertices[self._origin[h ^ 1]], self.vertices[self._origin[h]])

        for v, lst in outgoing.items():
            lst.sort(key=functools.cmp_to_key(lambda a, b: _angle_key_cmp(hdir(a), hdir(b))))
        self._outgoing = outgoing

        nxt = [0] * nh
        for h in range(nh):
            tw = h ^ 1
            lst = outgoing[origin[tw]]
            i = lst.index(tw)
            nxt[h] = lst[(i - 1) % len(lst)]
        self._next = nxt

        # Cycles.
        cycle_of = [-1] * nh
        cycles: List[List[int]] = []
        for h in range(nh):
            if cycle_of[h] >= 0:
                continue
            cyc = []
            g = h
            while cycle_of[g] < 0:
                cycle_of[g] = len(cycles)
                cyc.append(g)
                g = nxt[g]
            cycles.append(cyc)
        self._cycle_of = cycle_of

        def cycle_area2(cyc: List[int]) -> mpq:
            total = mpq(0)
            for h in cyc:
                a = self.vertices[origin[h]]
                b = self.vertices[origin[h ^ 1]]
                total += cross(a, b)
            return total

        areas = [cycle_area2(c) for c in cycles]
        all_edges = [
            (self.vertices[u], self.vertices[v]) for u, v, _ in self.subedges
        ]

        xlo, ylo, xhi, yhi = self._bbox()
        far = (xhi + 1, yhi + 1)

        # Faces: unbounded first, then bounded faces (positive cycles)
        # ordered by canonical boundary key.
        bounded = [(i, cyc) for i, cyc in enumerate(cycles) if areas[i] > 0]

        def cycle_key(cyc: List[int]):
            return min(
                (self.vertices[origin[h]], self.vertices[origin[h ^ 1]]) for h in cyc
            )

        bounded.sort(key=lambda ic: cycle_key(ic[1]))
        self.faces: List[RegionInfo] = []
        self._face_of_cycle: Dict[int, int] = {}
        w_far = tuple(0 for _ in self.curves)
        self.faces.append(RegionInfo("R_inf", w_far, far, bounded=False))
        for ci_idx, (i, cyc) in enumerate(bounded):
            h0 = cyc[0]
            m = geom.lerp(
                self.vertices[origin[h0]], self.vertices[origin[h0 ^ 1]], mpq(1, 2)
            )
            d = hdir_static(self.vertices, origin, h0)
            left = (-d[1], d[0])
            wit = probe_point(all_edges, m, left)
            w = tuple(winding(c, wit) for c in self.curves)
            key = cycle_key(cyc)
            rid = f"F({key[0][0]},{key[0][1]})-({key[1][0]},{key[1][1]})"
            self.faces.append(
                RegionInfo(
                    rid,
                    w,
                    wit,
                    bounded=True,
                    cycle_vertices=tuple(origin[h] for h in cyc),
                )
            )
            self._face_of_cycle[i] = len(self.faces) - 1
        # Hole cycles: a negative cycle bounds its owning face from inside.
        # The owner is the face of the smallest positive cycle containing a
        # point just left of the hole cycle; with none, the unbounded face.
        positive = [(areas[i], i, cyc) for i, cyc in enumerate(cycles) if areas[i] > 0]
        for i, cyc in enumerate(cycles):
            if areas[i] > 0:
                continue
            if areas[i] == 0:
                raise AssertionError("degenerate zero-area cycle")
            h0 = cyc[0]
            m = geom.lerp(
                self.vertices[origin[h0]], self.vertices[origin[h0 ^ 1]], mpq(1, 2)
            )
            d = hdir_static(self.vertices, origin, h0)
            left = (-d[1], d[0])
            wit = probe_point(all_edges, m, left)
            owner = None
            for area2, j, pcyc in positive:
                loop = [self.vertices[origin[h]] for h in pcyc]
                if _winding_of_loop(loop, wit) != 0:
                    if owner is None or area2 < owner[0]:
                        owner = (area2, j)
            self._face_of_cycle[i] = 0 if owner is None else self._face_of_cycle[owner[1]]
        self._areas = areas
        self._cycles = cycles
        self._check_structure()

    def _bbox(self):
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def _check_structure(self) -> None:
        # Euler formula with connected components.
        v = len(self.vertices)
        e = len(self.subedges)
        f = len(self.faces)
        parent = list(range(v))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, w, _ in self.subedges:
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[ru] = rw
        comps = len({find(i) for i in range(v)})
        if v - e + f != 1 + comps:
            raise AssertionError("Euler formula violated in arrangement build")
        for vid in self.crossing_vids:
            if len(self._outgoing[vid]) != 4:
                raise AssertionError("crossing vertex without 4 incident corners")

    # -- queries ------------------------------------------------------

    @property
    def unbounded_face(self) -> RegionInfo:
        return self.faces[0]

    def face_of_point(self, p: Point) -> RegionInfo:
        """Locate the face containing p (p must be off the curves)."""
        origin = self._origin
        for d in _ray_directions():
            best = None  # (s, subedge index)
            ok = True
            for k, (u, v, ci) in enumerate(self.subedges):
                a, b = self.vertices[u], self.vertices[v]
                e = sub(b, a)
                denom = cross(d, e)
                w = sub(a, p)
                if denom == 0:
                    if cross(w, d) == 0:
                        proj = geom.dot(w, d)
                        if proj >= 0 or geom.dot(sub(b, p), d) >= 0:
                            ok = False
                            break
                    continue
                s = cross(w, e) / denom
                t = cross(w, d) / denom
                if s == 0 and 0 <= t <= 1:
                    raise PointOnCurve("query point lies on the subdivision")
                if s <= 0:
                    continue
                if t == 0 or t == 1:
                    ok = False
                    break
                if 0 < t < 1:
                    if best is None or s < best[0]:
                        best = (s, k)
                    elif s == best[0]:
                        ok = False
                        break
            if not ok:
                continue
            if best is None:
                return self.faces[0]
            k = best[1]
            u, v, _ = self.subedges[k]
            a, b = self.vertices[u], self.vertices[v]
            side = orient(a, b, p)
            if side == 0:
                continue  # p collinear with the hit edge: retry direction
            h = 2 * k if side > 0 else 2 * k + 1
            cyc = self._cycle_of[h]
            return self.faces[self._face_of_cycle[cyc]]
        raise AssertionError("unreachable: ray directions exhausted")

    def boundary_crossing_corners(self, face: RegionInfo) -> int:
        """Occurrences of mutual-crossing vertices along a face's outer cycle."""
        return sum(1 for vid in face.cycle_vertices if vid in self.mutual_vids)


def build(curves: Sequence[PolyCurve]) -> Arrangement:
    return Arrangement(curves)


def hdir_static(vertices, origin, h: int) -> Vector:
    return sub(vertices[origin[h ^ 1]], vertices[origin[h]])
