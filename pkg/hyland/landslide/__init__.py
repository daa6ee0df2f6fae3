from .fields import (
    J0,
    MetricField,
    OperatorField,
    self_adjoint_defect,
    christoffel,
    codazzi_residual,
    metric_curvature,
    curvature_defect
)
from .flow import (
    PHASE_SIGN,
    associated_value,
    metrics_from_forms,
    labourie_operator,
    complex_structure,
    explicit_complex_structure,
    beta_theta,
    beta_eigen_defect,
    landslide_act,
    forms_from_metrics,
    surface_data,
    associated_check,
    numeric_surface_data,
    numeric_landslide_report
)
