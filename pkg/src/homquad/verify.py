"""Exact verification of every claim about homothetic parallelograms.

Each verifier recomputes both sides of a claim in rational arithmetic
and records them in a self-contained report. Length-ratio claims are
checked in squared, cross-multiplied form (|a|/|b| = c/d over
nonnegative reals iff a^2 d^2 = b^2 c^2), which keeps everything inside
the rationals -- no square roots, no tolerances.

``run_campaign`` drives all verifiers over seeded pseudo-random
quadrangles; identical seeds give identical campaigns.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .geometry import Point, collinear, cross, dot, format_scalar, shoelace_signed_area
from .homothety import (
    DegeneratePoint,
    Ratio,
    construct,
    dividing_points,
    homothety,
    result_vertices,
)
from .quadrangle import (
    InvalidQuadrangle,
    QuadClass,
    Quadrangle,
    UnclassifiableDegenerate,
    classify,
    diagonal_intersection,
    quad_signed_area,
    quad_to_json,
    validate,
)


class PreconditionViolated(ValueError):
    pass


class DegenerateParallelogram(ValueError):
    """Shape/similarity claims are undefined for the ratio-1 point."""


class GenerationExhausted(RuntimeError):
    pass


class ClaimId(enum.Enum):
    AREA_FORMULA = "AreaFormula"
    SIDES_PARALLEL_TO_DIAGONALS = "SidesParallelToDiagonals"
    SIMILAR_ACROSS_LAMBDA = "SimilarAcrossLambda"
    RECTANGLE_IFF_PERPENDICULAR = "RectangleIffPerpendicular"
    RHOMBUS_IFF_EQUAL_DIAGONALS = "RhombusIffEqualDiagonals"
    PERIMETER_RATIO = "PerimeterRatio"
    PERSPECTIVE_COLLINEAR = "PerspectiveCollinear"
    PERSPECTIVE_RATIO = "PerspectiveRatio"
    HOMOTHETY_IDENTITY = "HomothetyIdentity"
    MIDPOINT_SYMMETRY = "MidpointSymmetry"
    VARIGNON_AREA = "VarignonArea"
    WITTENBAUER_AREA = "WittenbauerArea"
    AREA_DECOMPOSITION = "AreaDecomposition"


@dataclass
class VerificationReport:
    claim: ClaimId
    passed: bool
    quad: Quadrangle
    ratios: Tuple[Ratio, ...]
    witness: Dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "claim": self.claim.value,
            "passed": self.passed,
            "quad": quad_to_json(self.quad),
            "lambdas": [format_scalar(r) for r in self.ratios],
            "witness": self.witness,
        }


def _wit(**values) -> Dict[str, str]:
    out = {}
    for key, val in values.items():
        if isinstance(val, Point):
            out[key] = f"({format_scalar(val.x)}, {format_scalar(val.y)})"
        elif isinstance(val, Fraction):
            out[key] = format_scalar(val)
        else:
            out[key] = str(val)
    return out


def _triangle_area(p: Point, q: Point, r: Point) -> Fraction:
    return abs(shoelace_signed_area([p, q, r]))


def _side_sq(vs: Sequence[Point]) -> List[Fraction]:
    return [(vs[(i + 1) % 4] - vs[i]).norm_sq() for i in range(4)]


def verify_area_formula(q: Quadrangle, ratio: Ratio) -> VerificationReport:
    """|area(KLMN)| = 2 (r-1)^2 |signed area(ABCD)|, all quadrangle classes."""
    vs = result_vertices(q, ratio)
    if len(set(vs)) < 3:
        left = Fraction(0)
    else:
        left = abs(shoelace_signed_area(list(vs)))
    right = 2 * (ratio - 1) ** 2 * abs(quad_signed_area(q))
    return VerificationReport(
        ClaimId.AREA_FORMULA,
        left == right,
        q,
        (ratio,),
        _wit(parallelogram_area=left, predicted=right),
    )


def verify_varignon_area(q: Quadrangle) -> VerificationReport:
    """Midpoint parallelogram area is half the quadrangle area."""
    vs = result_vertices(q, Fraction(1, 2))
    left = abs(shoelace_signed_area(list(vs)))
    right = abs(quad_signed_area(q)) / 2
    return VerificationReport(
        ClaimId.VARIGNON_AREA,
        left == right,
        q,
        (Fraction(1, 2),),
        _wit(parallelogram_area=left, half_quad_area=right),
    )


def verify_wittenbauer_area(q: Quadrangle) -> VerificationReport:
    """Trisection parallelogram area is 8/9 of the quadrangle area."""
    vs = result_vertices(q, Fraction(1, 3))
    left = abs(shoelace_signed_area(list(vs)))
    right = Fraction(8, 9) * abs(quad_signed_area(q))
    return VerificationReport(
        ClaimId.WITTENBAUER_AREA,
        left == right,
        q,
        (Fraction(1, 3),),
        _wit(parallelogram_area=left, eight_ninths_quad_area=right),
    )


def verify_sides_parallel(q: Quadrangle, ratio: Ratio) -> VerificationReport:
    """Parallelogram sides are parallel to the quadrangle diagonals."""
    if ratio == 1:
        raise DegenerateParallelogram("ratio 1 collapses the parallelogram")
    k, l, m, n = result_vertices(q, ratio)
    c1 = cross(l - k, q.c - q.a)
    c2 = cross(m - l, q.d - q.b)
    return VerificationReport(
        ClaimId.SIDES_PARALLEL_TO_DIAGONALS,
        c1 == 0 and c2 == 0,
        q,
        (ratio,),
        _wit(cross_kl_ac=c1, cross_lm_bd=c2),
    )


def verify_area_decomposition(q: Quadrangle, ratio: Ratio) -> VerificationReport:
    """Intermediate identity from the area proof (convex case, negative ratio):

    area(KLMN) = S_ABCD + (1-2r)^2 (S_OBA + S_OCB + S_ODC + S_OAD)
                 - r^2 (S_ADB + S_BAC + S_CBD + S_DCA)
    with all triangle areas taken unsigned.
    """
    if classify(q) is not QuadClass.CONVEX:
        raise PreconditionViolated("decomposition identity requires a convex quadrangle")
    if ratio >= 0:
        raise PreconditionViolated("decomposition identity requires a negative ratio")
    a, b, c, d = q.vertices
    o = diagonal_intersection(q)
    left = abs(shoelace_signed_area(list(result_vertices(q, ratio))))
    s_quad = abs(quad_signed_area(q))
    center_fans = (
        _triangle_area(o, b, a)
        + _triangle_area(o, c, b)
        + _triangle_area(o, d, c)
        + _triangle_area(o, a, d)
    )
    corner_fans = (
        _triangle_area(a, d, b)
        + _triangle_area(b, a, c)
        + _triangle_area(c, b, d)
        + _triangle_area(d, c, a)
    )
    right = s_quad + (1 - 2 * ratio) ** 2 * center_fans - ratio**2 * corner_fans
    return VerificationReport(
        ClaimId.AREA_DECOMPOSITION,
        left == right,
        q,
        (ratio,),
        _wit(parallelogram_area=left, decomposition_sum=right),
    )


def verify_shape_criteria(q: Quadrangle, ratio: Ratio) -> Tuple[VerificationReport, VerificationReport]:
    """Both biconditionals: rectangle iff perpendicular diagonals, rhombus
    iff equal-length diagonals. Returns (rectangle report, rhombus report)."""
    if ratio == 1:
        raise DegenerateParallelogram("ratio 1 collapses the parallelogram")
    k, l, m, n = result_vertices(q, ratio)
    ac = q.c - q.a
    bd = q.d - q.b
    diag_dot = dot(ac, bd)
    side_dot = dot(l - k, m - l)
    rect = VerificationReport(
        ClaimId.RECTANGLE_IFF_PERPENDICULAR,
        (diag_dot == 0) == (side_dot == 0),
        q,
        (ratio,),
        _wit(dot_diagonals=diag_dot, dot_adjacent_sides=side_dot),
    )
    diag_sq = (ac.norm_sq(), bd.norm_sq())
    side_sq = ((l - k).norm_sq(), (m - l).norm_sq())
    rhomb = VerificationReport(
        ClaimId.RHOMBUS_IFF_EQUAL_DIAGONALS,
        (diag_sq[0] == diag_sq[1]) == (side_sq[0] == side_sq[1]),
        q,
        (ratio,),
        _wit(
            diag_ac_sq=diag_sq[0],
            diag_bd_sq=diag_sq[1],
            side_kl_sq=side_sq[0],
            side_lm_sq=side_sq[1],
        ),
    )
    return rect, rhomb


def verify_perimeter_ratio(q: Quadrangle, r1: Ratio, r2: Ratio) -> VerificationReport:
    """p(r1)/p(r2) = |r1-1|/|r2-1|, checked per side in squared form.

    r2 = 1 is allowed: all its sides are zero and the identity degenerates
    to products of zeros.
    """
    s1 = _side_sq(result_vertices(q, r1))
    s2 = _side_sq(result_vertices(q, r2))
    f1 = (r2 - 1) ** 2
    f2 = (r1 - 1) ** 2
    ok = all(a * f1 == b * f2 for a, b in zip(s1, s2))
    return VerificationReport(
        ClaimId.PERIMETER_RATIO,
        ok,
        q,
        (r1, r2),
        _wit(
            sides_sq_1=" ".join(format_scalar(v) for v in s1),
            sides_sq_2=" ".join(format_scalar(v) for v in s2),
        ),
    )


def verify_perspective(q: Quadrangle, r1: Ratio, r2: Ratio) -> Tuple[VerificationReport, VerificationReport]:
    """The two parallelograms are in perspective from O with a fixed ratio.

    Per vertex family: (i) O, V(r1), V(r2) are collinear; (ii)
    |OV(r1)|^2 (r2-1)^2 = |OV(r2)|^2 (r1-1)^2. Returns (collinearity
    report, ratio report)."""
    o = diagonal_intersection(q)
    v1 = result_vertices(q, r1)
    v2 = result_vertices(q, r2)
    coll_ok = all(collinear(o, p1, p2) for p1, p2 in zip(v1, v2))
    f1 = (r2 - 1) ** 2
    f2 = (r1 - 1) ** 2
    ratio_ok = all((p1 - o).norm_sq() * f1 == (p2 - o).norm_sq() * f2 for p1, p2 in zip(v1, v2))
    coll = VerificationReport(
        ClaimId.PERSPECTIVE_COLLINEAR,
        coll_ok,
        q,
        (r1, r2),
        _wit(O=o),
    )
    rat = VerificationReport(
        ClaimId.PERSPECTIVE_RATIO,
        ratio_ok,
        q,
        (r1, r2),
        _wit(
            dist_sq_1=" ".join(format_scalar((p - o).norm_sq()) for p in v1),
            dist_sq_2=" ".join(format_scalar((p - o).norm_sq()) for p in v2),
        ),
    )
    return coll, rat


def verify_similarity(q: Quadrangle, r1: Ratio, r2: Ratio) -> VerificationReport:
    """Two homothetic parallelograms are similar: corresponding sides are
    parallel and the adjacent-side length ratios agree (squared form)."""
    if r1 == 1 or r2 == 1:
        raise DegenerateParallelogram("ratio 1 collapses the parallelogram")
    k1, l1, m1, _ = result_vertices(q, r1)
    k2, l2, m2, _ = result_vertices(q, r2)
    parallel = cross(l1 - k1, l2 - k2) == 0 and cross(m1 - l1, m2 - l2) == 0
    kl1, lm1 = (l1 - k1).norm_sq(), (m1 - l1).norm_sq()
    kl2, lm2 = (l2 - k2).norm_sq(), (m2 - l2).norm_sq()
    ratios_agree = kl1 * lm2 == kl2 * lm1
    return VerificationReport(
        ClaimId.SIMILAR_ACROSS_LAMBDA,
        parallel and ratios_agree,
        q,
        (r1, r2),
        _wit(kl_sq_1=kl1, lm_sq_1=lm1, kl_sq_2=kl2, lm_sq_2=lm2),
    )


def verify_homothety_identity(q: Quadrangle, ratio: Ratio) -> VerificationReport:
    """A_B(r) = B_A(1-r) on every side."""
    comp = 1 - ratio
    ok = all(homothety(p, t, ratio) == homothety(t, p, comp) for p, t in q.sides)
    return VerificationReport(
        ClaimId.HOMOTHETY_IDENTITY,
        ok,
        q,
        (ratio,),
        _wit(complement=comp),
    )


def verify_midpoint_symmetry(q: Quadrangle, ratio: Ratio) -> VerificationReport:
    """V(r) + V(1-r) = 2 V(1/2) for each of the four vertex families."""
    v_r = result_vertices(q, ratio)
    v_c = result_vertices(q, 1 - ratio)
    v_h = result_vertices(q, Fraction(1, 2))
    ok = all(
        p.x + c.x == 2 * h.x and p.y + c.y == 2 * h.y
        for p, c, h in zip(v_r, v_c, v_h)
    )
    return VerificationReport(
        ClaimId.MIDPOINT_SYMMETRY,
        ok,
        q,
        (ratio,),
        _wit(),
    )


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    coordinate_range: int = 10
    target_class: Optional[QuadClass] = None

    def __post_init__(self) -> None:
        if self.coordinate_range < 2:
            raise ValueError("coordinate_range must be at least 2")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


MAX_GENERATION_ATTEMPTS = 10_000


def _random_point(rng: random.Random, bound: int) -> Point:
    def coord() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return Point(coord(), coord())


def generate_quadrangle(cfg: GeneratorConfig) -> Quadrangle:
    """Deterministic pseudo-random valid quadrangle for a seed.

    Rejection-samples until validation (and the optional target class)
    is met, up to a fixed attempt budget.
    """
    rng = random.Random(cfg.seed)
    for _ in range(MAX_GENERATION_ATTEMPTS):
        pts = [_random_point(rng, cfg.coordinate_range) for _ in range(4)]
        try:
            q = validate(*pts)
            cls = classify(q)
        except (InvalidQuadrangle, UnclassifiableDegenerate):
            continue
        if cfg.target_class is None or cls is cfg.target_class:
            return q
    raise GenerationExhausted(
        f"no {cfg.target_class} quadrangle within {MAX_GENERATION_ATTEMPTS} attempts (seed {cfg.seed})"
    )


def _trial_seed(seed: int, trial: int) -> int:
    # Splitmix-style mixing keeps trials independent of execution order.
    x = (seed + 0x9E3779B97F4A7C15 * (trial + 1)) & (2**64 - 1)
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & (2**64 - 1)
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & (2**64 - 1)
    return x ^ (x >> 31)


def _ratio_pairs(ratios: Sequence[Ratio]) -> List[Tuple[Ratio, Ratio]]:
    """Consecutive pairs plus (each ratio, 1) for the formal-zero cases."""
    pairs = [(ratios[i], ratios[i + 1]) for i in range(len(ratios) - 1)]
    pairs.extend((r, Fraction(1)) for r in ratios)
    return pairs


def verify_quadrangle(
    q: Quadrangle,
    ratios: Sequence[Ratio],
    claims: Optional[Iterable[ClaimId]] = None,
) -> List[VerificationReport]:
    """Run every applicable verifier on one quadrangle."""
    wanted = set(claims) if claims is not None else set(ClaimId)
    reports: List[VerificationReport] = []

    def add(report: VerificationReport) -> None:
        if report.claim in wanted:
            reports.append(report)

    is_convex = classify(q) is QuadClass.CONVEX
    add(verify_varignon_area(q))
    add(verify_wittenbauer_area(q))
    for r in ratios:
        add(verify_area_formula(q, r))
        add(verify_homothety_identity(q, r))
        add(verify_midpoint_symmetry(q, r))
        if r != 1:
            add(verify_sides_parallel(q, r))
            rect, rhomb = verify_shape_criteria(q, r)
            add(rect)
            add(rhomb)
        if is_convex and r < 0:
            add(verify_area_decomposition(q, r))
    for r1, r2 in _ratio_pairs(list(ratios)):
        add(verify_perimeter_ratio(q, r1, r2))
        coll, rat = verify_perspective(q, r1, r2)
        add(coll)
        add(rat)
        if r1 != 1 and r2 != 1:
            add(verify_similarity(q, r1, r2))
    return reports


def run_campaign(
    cfg: GeneratorConfig,
    trials: int,
    ratios: Sequence[Ratio],
    claims: Optional[Iterable[ClaimId]] = None,
) -> List[VerificationReport]:
    """Generate ``trials`` quadrangles and verify every claim on each."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not ratios:
        raise ValueError("at least one ratio is required")
    reports: List[VerificationReport] = []
    for trial in range(trials):
        q = generate_quadrangle(replace(cfg, seed=_trial_seed(cfg.seed, trial)))
        reports.extend(verify_quadrangle(q, ratios, claims))
    return reports
