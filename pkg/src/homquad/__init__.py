"""Exact-rational homothetic parallelograms of a quadrangle.

Construction, theorem verification, and SVG rendering for the family of
parallelograms cut from a quadrangle by homothetically displaced side
points (midpoints give Varignon's parallelogram, trisection points give
Wittenbauer's).
"""

from .geometry import (
    CoincidentPoints,
    DegenerateSegment,
    GeometryError,
    Line,
    ParallelLines,
    Point,
    Scalar,
    TooFewPoints,
    Vec,
    collinear,
    cross,
    dot,
    format_scalar,
    intersect_lines,
    line_through,
    point_in_open_segment,
    scalar,
    shoelace_signed_area,
)
from .homothety import (
    DegeneratePoint,
    DividingPoints,
    HomotheticResult,
    Parallelogram,
    Ratio,
    closed_form_vertices,
    construct,
    dividing_points,
    homothety,
    homothety_identity_check,
    result_to_json,
    result_vertices,
)
from .quadrangle import (
    DuplicateVertex,
    InvalidQuadrangle,
    ParallelDiagonals,
    QuadClass,
    Quadrangle,
    UnclassifiableDegenerate,
    classify,
    diagonal_intersection,
    quad_from_json,
    quad_signed_area,
    quad_to_json,
    validate,
)
from .render import RenderOptions, Scene, compute_viewbox, render_svg
from .verify import (
    ClaimId,
    DegenerateParallelogram,
    GenerationExhausted,
    GeneratorConfig,
    PreconditionViolated,
    VerificationReport,
    generate_quadrangle,
    run_campaign,
    verify_area_decomposition,
    verify_area_formula,
    verify_homothety_identity,
    verify_midpoint_symmetry,
    verify_perimeter_ratio,
    verify_perspective,
    verify_quadrangle,
    verify_shape_criteria,
    verify_sides_parallel,
    verify_similarity,
    verify_varignon_area,
    verify_wittenbauer_area,
)

__version__ = "0.1.0"
