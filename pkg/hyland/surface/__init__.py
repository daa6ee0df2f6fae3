from .mesh import (
    SurfaceMesh,
    check_spectral_value,
    spectral_immersion,
    gauss_maps
)
from .forms import (
    QuadraticForm,
    FundamentalForms,
    AnalyticForms,
    mesh_interior,
    numeric_forms,
    analytic_forms,
    spectral_curvature,
    compare_forms,
    form_report
)
from .congruence import congruence_check, frame_of
from .export import export_obj, ball_normals, quad_faces
