"""Hilbert-geometry numerics: metric, p-area, Hex plane, ideal triangles,
and area lower bounds for convex projective surfaces."""

from .bounds import (
    OrbifoldSpec,
    SurfaceSpec,
    alpha_bound,
    coarse_bound,
    euler_characteristic,
    ideal_triangle_count,
    orbifold_bound,
)
from .domains import (
    ConvexDomain,
    EllipseDomain,
    PolygonDomain,
    TriangleDomain,
    domain_from_dict,
    quadrant,
)
from .errors import (
    GeometryError,
    HilbertGeoError,
    InvalidParameter,
    NonConvergence,
    PointsOutsideDomain,
)
from .hexplane import (
    HEX_AREA_FACTOR,
    HEX_VERTICES,
    hex_circle_stats,
    hex_distance,
    hex_norm,
    hex_parallelogram_area,
    hex_to_quadrant,
    polygon_gauge,
    quadrant_to_hex,
    triangle_to_hex,
)
from .ideal import (
    IdealTriangle,
    ShapeParam,
    canonical_triangle_region,
    db_dt_check,
    embed_canonical,
    leaf_length,
    shape_of_ideal_triangle,
    shape_parameter,
    tangent_triangle,
    triangle_area_closed,
    triangle_area_lower_bound,
    triangle_area_numeric,
)
from .metric import (
    Normalization,
    TangentVector,
    density_of_norm,
    finsler_norm,
    hilbert_area,
    hilbert_area_mc,
    hilbert_area_quadrature,
    hilbert_distance,
    p_area_density,
    unit_ball_boundary,
)
from .projective import (
    ProjLine,
    ProjMap,
    ProjPoint,
    RP1Point,
    apply_map,
    cross_ratio_affine,
    cross_ratio_proj,
    line_through,
    meet,
)
from .quadrature import (
    QuadratureResult,
    Rect,
    RegionUnion,
    Strip,
    TriangleRegion,
    UniformRectSampler,
    UniformTriangleSampler,
    VertexGradedTriangleSampler,
    central_difference,
    integrate_1d,
    integrate_2d,
    monte_carlo_2d,
)

__version__ = "0.1.0"
