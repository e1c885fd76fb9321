"""Exact rational geometric kernel.

Points and vectors are pairs of rationals (``gmpy2.mpq``).  Every predicate
here is exact: a returned zero means true geometric degeneracy, never
round-off.  Nothing in this module (or anything built on it) touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from gmpy2 import mpq

Rational = mpq
Point = Tuple[mpq, mpq]
Vector = Tuple[mpq, mpq]

RationalLike = Union[int, str, mpq]


def rat(value: RationalLike, den: Optional[int] = None) -> mpq:
    """Build a rational from an int, an ``"a/b"`` string, or another rational."""
    if den is not None:
        return mpq(value, den)
    return mpq(value)


def pt(x: RationalLike, y: RationalLike) -> Point:
    return (mpq(x), mpq(y))


def add(p: Point, v: Vector) -> Point:
    return (p[0] + v[0], p[1] + v[1])


def sub(p: Point, q: Point) -> Vector:
    return (p[0] - q[0], p[1] - q[1])


def scale(v: Vector, k: RationalLike) -> Vector:
    k = mpq(k)
    return (v[0] * k, v[1] * k)


def neg(v: Vector) -> Vector:
    return (-v[0], -v[1])


def cross(u: Vector, v: Vector) -> mpq:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Vector, v: Vector) -> mpq:
    return u[0] * v[0] + u[1] * v[1]


def sq_norm(v: Vector) -> mpq:
    return v[0] * v[0] + v[1] * v[1]


def sq_dist(p: Point, q: Point) -> mpq:
    return sq_norm(sub(p, q))


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def cross_sign(u: Vector, v: Vector) -> int:
    """+1 iff the ordered pair (u, v) is a positive basis of the plane."""
    return sign(cross(u, v))


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the determinant of (b-a, c-a); zero iff a, b, c are collinear."""
    return sign(cross(sub(b, a), sub(c, a)))


def lerp(a: Point, b: Point, t: RationalLike) -> Point:
    t = mpq(t)
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment [a, b]."""
    if orient(a, b, p) != 0:
        return False
    d = sub(b, a)
    s = dot(sub(p, a), d)
    return 0 <= s <= sq_norm(d)


def sq_dist_point_segment(p: Point, a: Point, b: Point) -> mpq:
    """Exact squared distance from p to the closed segment [a, b]."""
    d = sub(b, a)
    den = sq_norm(d)
    if den == 0:
        return sq_dist(p, a)
    t = dot(sub(p, a), d) / den
    if t <= 0:
        return sq_dist(p, a)
    if t >= 1:
        return sq_dist(p, b)
    return sq_dist(p, lerp(a, b, t))


# Classification tags for segment_intersection.
TRANSVERSE = "transverse"
ENDPOINT = "endpoint"
OVERLAP = "overlap"


@dataclass(frozen=True)
class SegmentIntersection:
    """One intersection of two segments.

    ``kind`` is ``transverse`` (interior-interior crossing), ``endpoint``
    (an endpoint of one segment touches the other, including shared
    endpoints), or ``overlap`` (collinear segments sharing more than a
    point; ``point`` then holds one point of the shared part).
    ``t1``/``t2`` are the rational parameters on each segment where
    defined (``None`` for overlaps).
    """

    point: Point
    kind: str
    t1: Optional[mpq]
    t2: Optional[mpq]


def segment_intersection(
    a1: Point, b1: Point, a2: Point, b2: Point
) -> Optional[SegmentIntersection]:
    """Intersect two segments exactly, classifying every degeneracy.

    Segments must have distinct endpoints.  Returns None when disjoint.
    """
    d1 = sub(b1, a1)
    d2 = sub(b2, a2)
    denom = cross(d1, d2)
    w = sub(a2, a1)
    if denom != 0:
        t1 = cross(w, d2) / denom
        t2 = cross(w, d1) / denom
        if t1 < 0 or t1 > 1 or t2 < 0 or t2 > 1:
            return None
        p = lerp(a1, b1, t1)
        if 0 < t1 < 1 and 0 < t2 < 1:
            return SegmentIntersection(p, TRANSVERSE, t1, t2)
        return SegmentIntersection(p, ENDPOINT, t1, t2)
    # Parallel.
    if cross(w, d1) != 0:
        return None
    # Collinear: project on d1.
    den = sq_norm(d1)
    s0 = dot(sub(a2, a1), d1)
    s1 = dot(sub(b2, a1), d1)
    lo, hi = (s0, s1) if s0 <= s1 else (s1, s0)
    lo = max(lo, mpq(0))
    hi = min(hi, den)
    if lo > hi:
        return None
    if lo == hi:
        p = lerp(a1, b1, lo / den)
        return SegmentIntersection(p, ENDPOINT, lo / den, None)
    p = lerp(a1, b1, lo / den)
    return SegmentIntersection(p, OVERLAP, None, None)
