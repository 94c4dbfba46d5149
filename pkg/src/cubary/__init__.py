"""Exact-arithmetic cubical complexes, cubical barycentric subdivision,
and short/long cubical h-vector transforms."""

from .complex_core import (
    CubicalComplex,
    ValidationReport,
    VoxelSpec,
    from_voxels,
    gen_cube,
    gen_cube_boundary,
    parse_voxel_text,
    validate,
)
from .face_vectors import (
    FVector,
    LongHVector,
    ShortHVector,
    check_long_short_identity,
    euler_reduced,
    f_from_hsc,
    f_vector,
    hc_from_hsc,
    hsc_from_f,
    hsc_from_hc,
    summary,
)
from .polytools import (
    RatPoly,
    is_real_rooted,
    mobius_transform,
    rational_roots,
    real_root_count,
    shape_predicates,
)
from .subdivision import (
    DEFAULT_FACE_BUDGET,
    FaceBudgetExceeded,
    projected_f_after,
    subdivide,
    subdivide_n,
)
from .transform import (
    CoeffMatrix,
    b_matrix,
    c_matrix,
    f_of_subdivision,
    hc_of_subdivision,
    hc_poly_of_iterate,
    hsc_of_subdivision,
    hsc_poly_of_iterate,
    limit_distance_hc,
    limit_distance_hsc,
)

__version__ = "0.1.0"

__all__ = [
    "CubicalComplex",
    "ValidationReport",
    "VoxelSpec",
    "from_voxels",
    "gen_cube",
    "gen_cube_boundary",
    "parse_voxel_text",
    "validate",
    "FVector",
    "LongHVector",
    "ShortHVector",
    "check_long_short_identity",
    "euler_reduced",
    "f_from_hsc",
    "f_vector",
    "hc_from_hsc",
    "hsc_from_f",
    "hsc_from_hc",
    "summary",
    "RatPoly",
    "is_real_rooted",
    "mobius_transform",
    "rational_roots",
    "real_root_count",
    "shape_predicates",
    "DEFAULT_FACE_BUDGET",
    "FaceBudgetExceeded",
    "projected_f_after",
    "subdivide",
    "subdivide_n",
    "CoeffMatrix",
    "b_matrix",
    "c_matrix",
    "f_of_subdivision",
    "hc_of_subdivision",
    "hc_poly_of_iterate",
    "hsc_of_subdivision",
    "hsc_poly_of_iterate",
    "limit_distance_hc",
    "limit_distance_hsc",
]
