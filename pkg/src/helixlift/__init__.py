"""Numerical differential geometry of space curves: Frenet frames, helix
classification, and axis lifts, with an independent position-only oracle."""

from .curves import (
    CallableCurve,
    CircularHelix,
    ParamCurve,
    PolynomialCurve,
    Polyline,
    RegularityReport,
    TransformedCurve,
    finite_difference_derivative,
    regularity_check,
    transform_curve,
)
from .curvespec import curve_from_dict, curve_to_dict, parse_curve_spec, serialize_curve_spec
from .errors import (
    DegenerateFrame,
    DegenerateGeometryError,
    InputError,
    NotAHelix,
    NotUnitSpeed,
    OutOfDomain,
    ParseError,
    StencilOutOfDomain,
    ThetaMismatch,
    ToolkitError,
    UnknownKind,
    ZeroSpeed,
)
from .frenet import (
    ArcLengthMap,
    FrenetFrame,
    ReparamCurve,
    arc_length,
    curvature_torsion,
    frame_at,
    reparam_by_arclength,
)
from .helix import (
    ConstancyStat,
    HelixClassification,
    bertrand_test,
    classify_curve,
    constancy_stat,
    helix_axis,
    lancret_test,
    slant_test,
)
from .lift import (
    AXIS_MODES,
    ClosedFormFrame,
    LiftSpec,
    LiftedCurve,
    c_factor,
    closed_form_lift_frame,
    lift_curve,
)
from .tolerances import DEFAULT_TOLERANCES, Tolerances
from .verify import (
    ErrataEntry,
    FrameDelta,
    TheoremResult,
    VerificationReport,
    compare_frames,
    oracle_frame,
    run_paper_suite,
    run_theorem_checks,
)

__version__ = "0.1.0"

__all__ = [
    "ArcLengthMap",
    "AXIS_MODES",
    "CallableCurve",
    "CircularHelix",
    "ClosedFormFrame",
    "ConstancyStat",
    "DEFAULT_TOLERANCES",
    "DegenerateFrame",
    "DegenerateGeometryError",
    "ErrataEntry",
    "FrameDelta",
    "FrenetFrame",
    "HelixClassification",
    "InputError",
    "LiftSpec",
    "LiftedCurve",
    "NotAHelix",
    "NotUnitSpeed",
    "OutOfDomain",
    "ParamCurve",
    "ParseError",
    "PolynomialCurve",
    "Polyline",
    "RegularityReport",
    "ReparamCurve",
    "StencilOutOfDomain",
    "TheoremResult",
    "ThetaMismatch",
    "Tolerances",
    "ToolkitError",
    "TransformedCurve",
    "UnknownKind",
    "VerificationReport",
    "ZeroSpeed",
    "arc_length",
    "bertrand_test",
    "c_factor",
    "classify_curve",
    "closed_form_lift_frame",
    "compare_frames",
    "constancy_stat",
    "curvature_torsion",
    "curve_from_dict",
    "curve_to_dict",
    "finite_difference_derivative",
    "frame_at",
    "helix_axis",
    "lancret_test",
    "lift_curve",
    "oracle_frame",
    "parse_curve_spec",
    "regularity_check",
    "reparam_by_arclength",
    "run_paper_suite",
    "run_theorem_checks",
    "serialize_curve_spec",
    "slant_test",
    "transform_curve",
    "__version__",
]
