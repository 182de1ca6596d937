"""Exact piecewise-linear homeomorphisms of the line and the groups they generate."""

from .errors import (
    DegenerateConfiguration,
    IdentityMap,
    InfiniteFixedSet,
    MissingAuxiliary,
    NotFree,
    NotOrientationPreserving,
    OverlapError,
    ParseError,
    PreconditionError,
    ReductionFailed,
    ResourceError,
    SharedFixedPoint,
    TypeSignatureUndefined,
    ValidationError,
)
from .groups import (
    GroupBall,
    PropertyVerdict,
    Word,
    abelian_global_fixed_check,
    build_ball,
    check_max_fixed,
    funnel_interval,
    global_fixed_points,
    is_abelian_on_ball,
    orbit_hits_interval,
    orientation_split,
)
from .pl import (
    FixedSet,
    Interval,
    MonotonePL,
    PiecewiseLinear,
    PLMap,
    Point,
    TypeSignature,
    commutator,
    compose,
    conjugate,
    equals,
    evaluate,
    fixed_set,
    inverse,
    power,
    rat,
    type_signature,
)
from .semiconj import (
    Caps,
    ClassificationReport,
    TauEstimate,
    chart_monotonicity,
    classify_minimal,
    collapse_map,
    theorem_a_report,
    translation_chart,
    verify_equivariance,
)
from .textio import format_map, parse_group_file, parse_map, parse_map_file
from .witness import CaseTag, WitnessReport, classify_case, construct_witness, wandering_check

__version__ = "0.1.0"
