"""Exact lattice combinatorics for curves on smooth projective toric surfaces.

The package computes boundary intersection numbers of a Laurent curve
straight from its Newton polygon and the fan of the ambient surface,
classifies the low degree cases, and turns the numbers into dimension
verdicts for families of multiple covers.  Everything is integer or
Fraction arithmetic; no floats anywhere.
"""

from .classify import (
    BoundarySpecialCase,
    Classification,
    ExpectedDimension,
    FiberOfProjection,
    HighDegree,
    LowDegreeBirational,
    MapsToFakePlane,
    NoSuchCovers,
    NotAComponent,
    ObstructedComponent,
    PairWitness,
    TripleWitness,
    Verdict,
    bn_verdict,
    classification_to_json,
    classify,
    expected_dim_maps_projective,
    expected_dim_maps_surface,
    farkas_expected_dim,
    line_witness_scan,
    multiple_cover_excess,
    rho,
    severi_dim,
    verdict_to_json,
    witness_to_json,
)
from .errors import (
    DomainError,
    DuplicateExponentError,
    DuplicateRayError,
    InternalContradictionError,
    LengthMismatchError,
    NonPrimitiveRayError,
    NotCompleteError,
    ParallelLinesError,
    SchemaError,
    SingularConeError,
    SingularFanError,
    TooFewRaysError,
    TooFewTermsError,
    ZeroCoefficientError,
    ZeroCoordinateError,
)
from .fan import (
    ClassGroup,
    FakePlane,
    Fan,
    SmoothnessReport,
    anticanonical_pairing,
    blow_up,
    build_fan,
    class_group,
    delete_rays,
    fan_from_json,
    fan_to_json,
    make_fake_plane,
    opposite_ray_pairs,
    preset,
    smoothness,
    zero_sum_triples,
)
from .lattice import (
    LatticePolygon,
    LatticeVector,
    Line,
    RationalPoint,
    boundary_lattice_points,
    convex_hull,
    det2,
    interior_lattice_points,
    lattice_distance,
    line_intersection,
    pairing,
    primitivize,
    rational_point_of,
    rotate_cw,
    vec,
)
from .newton import (
    BoundaryEdge,
    CircumscribedPolygon,
    LaurentCurve,
    SupportLine,
    anticanonical_degree,
    arithmetic_genus,
    boundary_intersections,
    chart_decomposition,
    circumscribed_polygon,
    curve_from_json,
    curve_to_json,
    evaluate,
    is_contracted_by_projection,
    is_fiber_of,
    is_singular_at,
    laurent_curve,
    newton_polygon,
    support,
    support_lines,
)
from .svg import render_fan_svg, render_polygons_svg

__version__ = "0.1.0"

__all__ = [
    "BoundaryEdge",
    "BoundarySpecialCase",
    "CircumscribedPolygon",
    "ClassGroup",
    "Classification",
    "DomainError",
    "DuplicateExponentError",
    "DuplicateRayError",
    "ExpectedDimension",
    "FakePlane",
    "Fan",
    "FiberOfProjection",
    "HighDegree",
    "InternalContradictionError",
    "LatticePolygon",
    "LatticeVector",
    "LaurentCurve",
    "LengthMismatchError",
    "Line",
    "LowDegreeBirational",
    "MapsToFakePlane",
    "NoSuchCovers",
    "NonPrimitiveRayError",
    "NotAComponent",
    "NotCompleteError",
    "ObstructedComponent",
    "PairWitness",
    "ParallelLinesError",
    "RationalPoint",
    "SchemaError",
    "SingularConeError",
    "SingularFanError",
    "SmoothnessReport",
    "SupportLine",
    "TooFewRaysError",
    "TooFewTermsError",
    "TripleWitness",
    "Verdict",
    "ZeroCoefficientError",
    "ZeroCoordinateError",
    "anticanonical_degree",
    "anticanonical_pairing",
    "arithmetic_genus",
    "blow_up",
    "bn_verdict",
    "boundary_intersections",
    "boundary_lattice_points",
    "build_fan",
    "chart_decomposition",
    "circumscribed_polygon",
    "class_group",
    "classification_to_json",
    "classify",
    "convex_hull",
    "curve_from_json",
    "curve_to_json",
    "delete_rays",
    "det2",
    "evaluate",
    "expected_dim_maps_projective",
    "expected_dim_maps_surface",
    "fan_from_json",
    "fan_to_json",
    "farkas_expected_dim",
    "interior_lattice_points",
    "is_contracted_by_projection",
    "is_fiber_of",
    "is_singular_at",
    "lattice_distance",
    "laurent_curve",
    "line_intersection",
    "line_witness_scan",
    "make_fake_plane",
    "multiple_cover_excess",
    "newton_polygon",
    "opposite_ray_pairs",
    "pairing",
    "preset",
    "primitivize",
    "rational_point_of",
    "render_fan_svg",
    "render_polygons_svg",
    "rho",
    "rotate_cw",
    "severi_dim",
    "smoothness",
    "support",
    "support_lines",
    "vec",
    "verdict_to_json",
    "witness_to_json",
    "zero_sum_triples",
]
