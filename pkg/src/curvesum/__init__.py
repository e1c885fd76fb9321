"""Exact rational geometry of generic closed plane curves, their
generalized connected sums along bridges, and the associated invariants."""

from .curves import (
    Bridge,
    Crossing,
    CurveLocation,
    PolyCurve,
    mutual_crossings,
    self_crossings,
    standard_curve,
    validate_bridge,
    validate_general_position,
    validate_generic,
)
from .arrangement import Arrangement, ind_v, ind_v_region, rotation_number, winding
from .combinatorics import e_sign, separated
from .sums import (
    BridgeStats,
    SumConstruction,
    bridge_stats,
    classify,
    compatible_orientations,
    construct_sum,
    push_appendix,
)
from .t_invariants import TPair, t_pm, t_pm_polygon, t_pm_simple, t_st, t_st_appendix_identity
from .invariants import (
    InvariantLedger,
    SumInputs,
    base_invariants,
    connected_sum_invariants,
    consistency_check,
    plain_bridge_invariants,
    strange_sum_invariants,
    sum_invariants,
)
from .homotopy import SimulationResult, simulate_separation
from .generator import InstanceGenerator, RandomSpec
from .io_formats import (
    InstanceFile,
    dumps,
    loads,
    pair_with_bridge,
    read_instance,
    single_curve,
    write_instance,
)
from .render import render_configuration, render_filmstrip
from .errors import (
    CurvesumError,
    GenericityError,
    HypothesisViolated,
    NoGenericDirection,
    NotSeparated,
    NotSimple,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "Bridge",
    "BridgeStats",
    "Crossing",
    "CurveLocation",
    "CurvesumError",
    "GenericityError",
    "HypothesisViolated",
    "InstanceFile",
    "InstanceGenerator",
    "InvariantLedger",
    "NoGenericDirection",
    "NotSeparated",
    "NotSimple",
    "PolyCurve",
    "RandomSpec",
    "SimulationResult",
    "SumConstruction",
    "SumInputs",
    "TPair",
    "__version__",
    "base_invariants",
    "bridge_stats",
    "classify",
    "compatible_orientations",
    "connected_sum_invariants",
    "consistency_check",
    "construct_sum",
    "dumps",
    "e_sign",
    "ind_v",
    "ind_v_region",
    "loads",
    "mutual_crossings",
    "pair_with_bridge",
    "plain_bridge_invariants",
    "push_appendix",
    "read_instance",
    "render_configuration",
    "render_filmstrip",
    "rotation_number",
    "self_crossings",
    "separated",
    "simulate_separation",
    "single_curve",
    "standard_curve",
    "strange_sum_invariants",
    "sum_invariants",
    "t_pm",
    "t_pm_polygon",
    "t_pm_simple",
    "t_st",
    "t_st_appendix_identity",
    "validate_bridge",
    "validate_general_position",
    "validate_generic",
    "winding",
    "write_instance",
]
