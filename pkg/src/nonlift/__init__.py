"""Exact projective geometry over prime fields and finite local rings.

The package has three layers.  `finite_geometry` enumerates points, lines
and planes of low-dimensional projective spaces over F_p and packages them
into incidence configurations.  `local_ring` and `lift_checker` redo the
geometry over length-two coefficient rings and decide whether a plane
configuration admits a collinearity-preserving lift, producing a checkable
certificate either way.  `motive` computes Lefschetz-polynomial classes of
the blown-up spaces built from those configurations, together with their
numerical invariants.
"""

from .errors import (
    BudgetExceededError,
    DegeneratePlaneError,
    DegenerateSpanError,
    IndeterminateIntersectionError,
    IndeterminateSpanError,
    InvalidBlowupError,
    InvalidParameterError,
    MissingAssignmentError,
    NonliftError,
    NotAProjectivePointError,
    UndecidableCollinearityError,
    UnsupportedDimensionError,
)
from .finite_geometry import (
    IncidenceConfig,
    LineFp,
    PlaneFp,
    ProjPointFp,
    check_prime,
    collinear,
    coplanar,
    enumerate_lines,
    enumerate_points,
    fp_point,
    incidence_config,
    line_dual,
    line_from_dual,
    line_through,
    mp_configuration,
)
from .lift_checker import (
    DEFAULT_BUDGET,
    VERDICT_BLOCKED,
    VERDICT_OPEN,
    DerivationStep,
    Frame,
    Obstruction,
    PropagationTrace,
    SearchResult,
    brute_force_lift_search,
    certificate_json,
    certificate_parse,
    certificate_render,
    check_collinearity_preserving,
    collinear_triples,
    extract_used_configuration,
    frame_anchors,
    propagate_forced_lift,
    search_over_all_frames,
    trivial_lift_map,
)
from .local_ring import (
    LineA,
    LocalRing,
    PlaneA,
    ProjPointA,
    RingElem,
    collinear_A,
    coplanar_A,
    enumerate_lifts,
    line_intersect_A,
    line_through_A,
    plane_through_A,
    point_normalize,
    point_reduce,
    ring_make,
)
from .motive import (
    CENTER_KINDS,
    FLAG_ENUM_MAX,
    FLAG_MAX,
    LEFSCHETZ,
    InvariantsTable,
    LPolynomial,
    VarietyClass,
    blowup_class,
    construction_one_class,
    construction_two_class,
    flag_class_typeA,
    grassmannian_class,
    incidence_variety_point_count,
    invariants_table,
    point_count_oracle_construction_two,
    projective_space_class,
    quadric_class,
    quadric_point_count,
    rational_point_line_counts,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CENTER_KINDS",
    "DEFAULT_BUDGET",
    "DegeneratePlaneError",
    "DegenerateSpanError",
    "DerivationStep",
    "FLAG_ENUM_MAX",
    "FLAG_MAX",
    "Frame",
    "IncidenceConfig",
    "IndeterminateIntersectionError",
    "IndeterminateSpanError",
    "InvalidBlowupError",
    "InvalidParameterError",
    "InvariantsTable",
    "LEFSCHETZ",
    "LPolynomial",
    "LineA",
    "LineFp",
    "LocalRing",
    "MissingAssignmentError",
    "NonliftError",
    "NotAProjectivePointError",
    "Obstruction",
    "PlaneA",
    "PlaneFp",
    "ProjPointA",
    "ProjPointFp",
    "PropagationTrace",
    "RingElem",
    "SearchResult",
    "UndecidableCollinearityError",
    "UnsupportedDimensionError",
    "VERDICT_BLOCKED",
    "VERDICT_OPEN",
    "VarietyClass",
    "blowup_class",
    "brute_force_lift_search",
    "certificate_json",
    "certificate_parse",
    "certificate_render",
    "check_collinearity_preserving",
    "check_prime",
    "collinear",
    "collinear_A",
    "collinear_triples",
    "construction_one_class",
    "construction_two_class",
    "coplanar",
    "coplanar_A",
    "enumerate_lifts",
    "enumerate_lines",
    "enumerate_points",
    "extract_used_configuration",
    "flag_class_typeA",
    "fp_point",
    "frame_anchors",
    "grassmannian_class",
    "incidence_config",
    "incidence_variety_point_count",
    "invariants_table",
    "line_dual",
    "line_from_dual",
    "line_intersect_A",
    "line_through",
    "line_through_A",
    "mp_configuration",
    "plane_through_A",
    "point_count_oracle_construction_two",
    "point_normalize",
    "point_reduce",
    "projective_space_class",
    "propagate_forced_lift",
    "quadric_class",
    "quadric_point_count",
    "rational_point_line_counts",
    "ring_make",
    "search_over_all_frames",
    "trivial_lift_map",
]
