from .grid import DomainGrid
from .metric import (
    MetricData,
    NONDEGENERACY_MARGIN,
    sigma_of,
    curvature_of,
    s_of_curvature,
    gauss_residual,
    klotz_residual,
    save_metric_data,
    load_metric_data
)
from .profile import (
    solve_profile_ode,
    integrate_profile,
    first_integral
)
from .patch import (
    solve_patch,
    harmonic_extension,
    evaluate_polynomial
)
