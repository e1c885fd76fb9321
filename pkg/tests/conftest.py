"""Shared fixed geometries used across the test modules.

Every coordinate here is exact; shapes are chosen so that no two curves
of a pair share an edge direction (a rigid translation separating them
then stays generic, which the homotopy simulator requires).
"""

from gmpy2 import mpq

from curvesum.curves import Bridge, CurveLocation, PolyCurve


def poly(*pts) -> PolyCurve:
    return PolyCurve.from_coords([(mpq(a), mpq(b)) for a, b in pts])


def bowtie() -> PolyCurve:
    """Figure-eight polyline with its double point at (1, 1)."""
    return poly((0, 0), (2, 2), (2, 0), (0, 2))


def ccw_square() -> PolyCurve:
    return poly((0, 0), (4, 0), (4, 4), (0, 4))


def lens_pair():
    """Two convex quadrilaterals crossing at exactly two points."""
    a = poly((0, 0), (5, 1), (6, 3), (0, 4))
    b = poly((4, -2), (9, 0), (10, 5), (3, 6))
    return a, b


def nested_diamonds():
    """A small diamond strictly inside a large one, both counterclockwise."""
    outer = poly((-5, 0), (0, -5), (5, 0), (0, 5))
    inner = poly((-2, 0), (0, -1), (2, 0), (0, 1))
    return inner, outer


def diamond_pair_with_interior_bridge():
    """Two separated simple curves joined by a bridge that dips through
    the interior of the first one exactly once (no self-crossings)."""
    c0 = poly((-5, 0), (0, -5), (5, 0), (0, 5))
    c1 = poly((20, 0), (25, -4), (31, 0), (24, 5))
    bridge = Bridge(
        CurveLocation(2, mpq(1, 2)),
        CurveLocation(0, mpq(2, 5)),
        ((mpq(0), mpq(0)), (mpq(12), mpq(-3))),
    )
    return c0, c1, bridge


def eight_in_pocket():
    """A tiny sheared figure-eight sitting inside the doubly wound pocket
    of the two-loop standard curve, with a straight bridge between them."""
    from curvesum.curves import standard_curve

    bow = bowtie()
    sheared = bow.transform((mpq(1), mpq(1, 3), mpq(1, 7), mpq(1)),
                            (mpq(0), mpq(0)))
    small = sheared.transform((mpq(1, 5), mpq(0), mpq(0), mpq(1, 5)),
                              (mpq(1, 4), mpq(7, 4)))
    host = standard_curve(2)
    bridge = Bridge(CurveLocation(1, mpq(1, 3)), CurveLocation(3, mpq(1, 2)), ())
    return small, host, bridge


def two_loop_in_ring():
    """The two-loop standard curve enclosed by a large quadrilateral with
    no parallel edges between the two."""
    from curvesum.curves import standard_curve

    ring = poly((-20, -9), (21, -8), (23, 17), (-19, 19))
    return standard_curve(2), ring
