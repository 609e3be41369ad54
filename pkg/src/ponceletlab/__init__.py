"""Numerical laboratory for Poncelet triangle families in concentric conic
pairs: constructions, conserved cosine sums and products, caustic solving,
and cosine-space locus geometry."""

from .conics import (
    ConicPair,
    Ellipse,
    cayley_residual,
    confocal_scale,
    derived_radii,
    excentral_locus_axes,
    excentral_scale,
    incircle_circumradius,
    r_over_R_confocal,
)
from .elliptic import EllipticDomainError, complete_K, jacobi_sn_cn_dn
from .families import (
    DegenerateTriangleError,
    FamilySpec,
    GeometryError,
    NoCausticError,
    NonAcuteTriangleError,
    ParametrizationError,
    Polygon,
    billiard_outer_axes,
    billiard_periodic,
    billiard_vertices,
    circumcircle_triangle,
    confocal_triangle,
    excentral_family_triangle,
    excentral_of,
    family_period,
    family_vertices,
    incircle_triangle,
    internal_cosines,
    orthic_of,
    outer_polygon,
    polygon_at,
    solve_confocal_caustic,
)
from .invariants import (
    InvariantReport,
    cosine_extremes,
    cosine_product_target,
    cosine_sum_target,
    observed_cosine_extremes,
    sweep,
    sweep_reports,
)
from .loci import (
    BASIS,
    CosineTriple,
    LocusSample,
    cubic_residual,
    curve_points,
    hausdorff_distance,
    locus_hausdorff,
    log_cosine,
    pick_residual,
    plane_project,
    sample_locus,
    sphere_titeica_residuals,
    union_residual,
)
from .oracle import (
    Ray,
    reflect_step,
    reflection_residual,
    tangency_residual,
    trace_closure,
)

__version__ = "0.1.0"
