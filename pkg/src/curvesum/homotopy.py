"""Event-driven simulation of a separating homotopy.

The first curve is translated along a fixed rational direction until the
two curves are separated.  Every contact moment is an exact rational root
of a linear equation; contacts are classified as tangency moments (direct
or inverse, each with a birth/death sign), transparent vertex passages
(an artifact of polyline smoothing, no contribution), or triple-point
moments (a double point of one curve crossing the other, signed by the
traversal order at the double point and the side it comes from).

The tallies reproduce the closed-form counts computed by
:mod:`curvesum.t_invariants` without sharing any code with them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .combinatorics import e_sign
from .curves import (
    Bridge,
    CurveLocation,
    PolyCurve,
    self_crossings,
    validate_general_position,
    validate_generic,
)
from .errors import NoGenericDirection
from .geom import Point, add, cross, dot, scale, sign, sub
from .sums import compatible_orientations
from .t_invariants import TPair

TANGENCY_DIRECT = "tangency-direct"
TANGENCY_INVERSE = "tangency-inverse"
TRANSPARENT = "transparent"
TRIPLE = "triple"


@dataclass(frozen=True)
class Event:
    time: mpq
    kind: str
    point: Point  # contact location in the static curve's frame
    sign: Optional[int]  # +1 birth / -1 death for tangencies; signed count
    #                      for triple moments; None for transparent passages
    moving: int  # index of the curve whose vertex or double point triggered it


@dataclass(frozen=True)
class SimulationResult:
    t_pair: TPair
    t_st: Optional[int]
    events: Tuple[Event, ...]
    direction: Point
    travel: mpq
    attempts: int


class _DirectionRejected(Exception):
    pass


#: A fixed fan of low-height rational directions used to probe whether a
#: pair of curves admits generic sweeps at all.  Some pairs carry
#: translation-invariant coincidences (two vertex/edge contacts with the
#: same relative offset happen at the same time for *every* direction);
#: such pairs reject essentially all of this pool.
PROBE_DIRECTIONS: Tuple[Point, ...] = tuple(
    (mpq(a), mpq(b))
    for a, b in (
        (1, 0), (0, 1), (2, 1), (1, 2), (3, 1), (1, 3), (3, 2), (2, 3),
        (5, 1), (1, 5), (4, 3), (3, 4), (5, 2), (2, 5), (7, 2), (5, 3),
    )
)


def count_generic_directions(
    c0: PolyCurve,
    c1: PolyCurve,
    directions: Sequence[Point] = PROBE_DIRECTIONS,
) -> int:
    """How many of the given translation directions give a generic sweep
    (all contact moments distinct and transverse)."""
    e_by_point: List[Dict[Point, Optional[int]]] = [
        {cr.point: None for cr in self_crossings(c)} for c in (c0, c1)
    ]
    accepted = 0
    for u in directions:
        try:
            _sweep(c0, c1, u, e_by_point)
        except _DirectionRejected:
            continue
        accepted += 1
    return accepted


def _direction_stream(seed: int):
    rng = random.Random(seed)
    yield (mpq(1), mpq(0))
    yield (mpq(2), mpq(1))
    while True:
        ux = rng.randint(-19, 19)
        uy = rng.randint(-19, 19)
        if ux or uy:
            yield (mpq(ux), mpq(uy))


def simulate_separation(
    c0: PolyCurve,
    c1: PolyCurve,
    *,
    bridge: Optional[Bridge] = None,
    bases: Optional[Tuple[CurveLocation, CurveLocation]] = None,
    direction: Optional[Point] = None,
    seed: int = 0,
    max_attempts: int = 64,
) -> SimulationResult:
    """Separate the curves by translating the first one, and tally the
    tangency and triple moments along the way.

    With a bridge (or explicit base locations) the triple moments are
    signed and summed into a triple-point count; otherwise that count is
    only available when both curves are simple.
    """
    validate_generic(c0).raise_if_failed()
    validate_generic(c1).raise_if_failed()
    if bridge is not None:
        oriented = compatible_orientations(c0, c1, bridge)
        c0, c1 = oriented.c0, oriented.c1
        bases = (oriented.loc0, oriented.loc1)
    validate_general_position(c0, c1).raise_if_failed()

    e_by_point: List[Dict[Point, Optional[int]]] = []
    for idx, c in enumerate((c0, c1)):
        table: Dict[Point, Optional[int]] = {}
        for cr in self_crossings(c):
            if bases is not None:
                table[cr.point] = e_sign(c, bases[idx], cr)
            else:
                table[cr.point] = None
        e_by_point.append(table)

    if direction is not None:
        stream = iter([direction])
        max_attempts = 1
    else:
        stream = _direction_stream(seed)
    for attempt in range(1, max_attempts + 1):
        u = next(stream)
        try:
            events = _sweep(c0, c1, u, e_by_point)
        except _DirectionRejected:
            continue
        plus = sum(e.sign for e in events if e.kind == TANGENCY_DIRECT)
        minus = sum(e.sign for e in events if e.kind == TANGENCY_INVERSE)
        triples = [e for e in events if e.kind == TRIPLE]
        t_st: Optional[int] = None
        if all(e.sign is not None for e in triples):
            t_st = sum(e.sign for e in triples)
        return SimulationResult(
            t_pair=TPair(plus, minus),
            t_st=t_st,
            events=tuple(events),
            direction=u,
            travel=_separation_time(c0, c1, u),
            attempts=attempt,
        )
    raise NoGenericDirection("no sampled direction gives a generic sweep")


def _separation_time(c0: PolyCurve, c1: PolyCurve, u: Point) -> mpq:
    uu = dot(u, u)
    lo0 = min(dot(v, u) for v in c0.vertices)
    hi1 = max(dot(v, u) for v in c1.vertices)
    t = (hi1 - lo0) / uu + 1
    return t if t > 0 else mpq(1)


def _sweep(c0: PolyCurve, c1: PolyCurve, u: Point,
           e_by_point: Sequence[Dict[Point, Optional[int]]]) -> List[Event]:
    edges0 = list(c0.edges())
    edges1 = list(c1.edges())

    _reject_parallel_overlaps(edges0, edges1, u)

    candidates: List[Tuple[mpq, Event]] = []

    def add_event(t: mpq, ev: Event) -> None:
        if t <= 0:
            raise _DirectionRejected
        candidates.append((t, ev))

    du_sign_cache: Dict[Point, int] = {}

    def point_vs_edge(w: Point, p: Point, d: Point, point_moves: bool):
        """Root and edge parameter for a point meeting an edge line, with
        the point's side of the line just before the contact."""
        duv = cross(d, u)
        off = cross(d, sub(w, p))
        if duv == 0:
            if off == 0:
                raise _DirectionRejected  # point rides the edge line
            return None
        t = -off / duv if point_moves else off / duv
        if t <= 0:
            return None
        rel = add(sub(w, p), scale(u, t if point_moves else -t))
        s = dot(rel, d) / dot(d, d)
        if s <= 0 or s >= 1:
            if s == 0 or s == 1:
                raise _DirectionRejected  # endpoint contact
            return None
        before = -sign(duv) if point_moves else sign(duv)
        return t, rel, s, before

    # vertex events, both directions
    for moving, (cv, ce) in enumerate(((c0, edges1), (c1, edges0))):
        point_moves = moving == 0
        n = cv.n
        for i, w in enumerate(cv.vertices):
            prev = cv.vertices[(i - 1) % n]
            nxt = cv.vertices[(i + 1) % n]
            # sense of the corner turn: the smoothed tangent sweeps from the
            # incoming to the outgoing direction through exactly one
            # direction parallel to any line touched at the corner
            turn = sign(cross(sub(w, prev), sub(nxt, w)))
            for _, p, q in ce:
                d = sub(q, p)
                hit = point_vs_edge(w, p, d, point_moves)
                if hit is None:
                    continue
                t, rel, s, before = hit
                shift = scale(u, t if point_moves else -t)
                s_prev = sign(cross(d, add(sub(prev, p), shift)))
                s_next = sign(cross(d, add(sub(nxt, p), shift)))
                if s_prev == 0 or s_next == 0:
                    raise _DirectionRejected
                # report contacts in the frame of the static second curve
                contact = add(p, scale(d, s)) if point_moves else w
                if s_prev != s_next:
                    add_event(t, Event(t, TRANSPARENT, contact, None, moving))
                    continue
                if turn == 0:
                    raise _DirectionRejected
                # the touch tangent points along the met edge when the turn
                # bends away from it, i.e. when the turn sense matches the
                # side the neighbors are on
                kind = TANGENCY_DIRECT if turn == s_prev else TANGENCY_INVERSE
                ev_sign = 1 if before == s_prev else -1
                add_event(t, Event(t, kind, contact, ev_sign, moving))

    # triple events: a double point of one curve crossing the other curve
    for moving, (cv, ce) in enumerate(((c0, edges1), (c1, edges0))):
        point_moves = moving == 0
        for crn in self_crossings(cv):
            x = crn.point
            e_val = e_by_point[moving].get(x)
            for _, p, q in ce:
                d = sub(q, p)
                hit = point_vs_edge(x, p, d, point_moves)
                if hit is None:
                    continue
                t, rel, s, before = hit
                if (
                    cross(d, crn.branch1.direction) == 0
                    or cross(d, crn.branch2.direction) == 0
                ):
                    # a branch of the double point is parallel to the edge
                    # it meets: the triple contact is not transverse
                    raise _DirectionRejected
                contact = add(p, scale(d, s)) if point_moves else x
                ev_sign = None if e_val is None else e_val * before
                add_event(t, Event(t, TRIPLE, contact, ev_sign, moving))

    candidates.sort(key=lambda rec: rec[0])
    for a, b in zip(candidates, candidates[1:]):
        if a[0] == b[0]:
            raise _DirectionRejected  # simultaneous contacts
    return [ev for _, ev in candidates]


def _reject_parallel_overlaps(edges0, edges1, u: Point) -> None:
    """A direction is unusable if two parallel edges would ever become
    collinear with overlapping spans."""
    for _, a, b in edges0:
        d0 = sub(b, a)
        for _, p, q in edges1:
            d1 = sub(q, p)
            if cross(d0, d1) != 0:
                continue
            duv = cross(d1, u)
            off = cross(d1, sub(a, p))
            if duv == 0:
                if off == 0:
                    raise _DirectionRejected
                continue
            t = -off / duv
            if t <= 0:
                continue
            shift = scale(u, t)
            dd = dot(d1, d1)
            s0 = dot(add(sub(a, p), shift), d1)
            s1 = dot(add(sub(b, p), shift), d1)
            lo, hi = min(s0, s1), max(s0, s1)
            if hi >= 0 and lo <= dd:
                raise _DirectionRejected
