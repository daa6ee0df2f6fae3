from .develop import (
    DevelopingMap,
    developing_map,
    period_pairs,
    dev_equivariance
)
from .records import (
    HolonomyRecord,
    sign_class,
    principal_sqrt,
    frame_holonomy_at_sqrt_q,
    dev_holonomy,
    compare_holonomy,
    fixed_point_distance
)
from .scan import (
    QGrid,
    untwisted_trace,
    cauchy_riemann,
    holomorphy_scan
)
from .pipeline import LandslideStructure, complex_landslide
