from .hermitian import (
    E0, E1, E2, E3,
    dagger,
    det2,
    inv2,
    normalize_sl2,
    from_coordinates,
    to_coordinates,
    minkowski_inner,
    UnitTangent,
    project_to_h3,
    unit_tangent_of_frame,
    hyperbolic_distance,
    to_poincare_ball
)
from .cp1 import (
    CP1Point,
    GeodesicLine,
    chordal_distance,
    geodesic_endpoints,
    columns
)
from .moebius import (
    SL2_BASIS,
    MoebiusMap,
    moebius_apply,
    moebius_fit,
    three_point_map,
    fit_residual,
    conjugation_distance
)
