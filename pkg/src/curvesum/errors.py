"""Exception types shared across the package."""


class CurvesumError(Exception):
    """Base class for all errors raised by this package."""


class GenericityError(CurvesumError):
    """Input geometry violates a genericity precondition."""


class PointOnCurve(CurvesumError):
    """A query point lies on the curve itself."""


class TangentVector(CurvesumError):
    """The probe vector is parallel to the curve at the query location."""


class BaseOnDoublePoint(CurvesumError):
    """The base location coincides with a double point."""


class DegenerateArc(CurvesumError):
    """The arc has a tangential or vertex contact with the curve."""


class NotAnInteriorCrossing(CurvesumError):
    """The queried point is not an interior bridge/curve crossing."""


class BridgeInvalid(CurvesumError):
    """The bridge fails its validity conditions."""


class NotSimple(CurvesumError):
    """A simple closed curve was required."""


class NotSeparated(CurvesumError):
    """The two curves are not separated."""


class HypothesisViolated(CurvesumError):
    """A formula was applied outside its hypotheses."""


class InconsistentInputs(CurvesumError):
    """Aggregated inputs do not belong to the same instance."""


class ConstructionDegenerate(CurvesumError):
    """The clearance search for a constructive step was exhausted."""


class NoGenericDirection(CurvesumError):
    """No generic translation direction found within the retry budget."""
