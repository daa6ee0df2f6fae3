import logging
import numpy as np
from .fields import (
    J0,
    TO_COMPLEX,
    MetricField,
    OperatorField,
    self_adjoint_defect,
    codazzi_residual,
    curvature_defect
)
from hyland.gauss import DomainGrid, MetricData
from hyland.surface import (
    SurfaceMesh,
    FundamentalForms,
    QuadraticForm,
    numeric_forms,
    analytic_forms,
    compare_forms
)
from hyland.errors import DegenerateForms

logger = logging.getLogger(__name__)

# the landslide by theta matches the associated family member with
# spectral value e^{-s/2} e^{i PHASE_SIGN theta/2}
PHASE_SIGN = -1

def associated_value(s:float, theta:float) -> complex:
    return complex(np.exp(-0.5 * s) * np.exp(0.5j * PHASE_SIGN * theta))

def metrics_from_forms(forms:FundamentalForms, s:float, grid:DomainGrid, atol:float =1e-10) -> tuple[MetricField, MetricField]:
    """h = I / cosh^2(s/2) and h* = III / sinh^2(s/2)"""
    if s <= 0:
        raise ValueError("Parameter s must be positive, got %s" % s)
    h = forms.I.to_real() / np.cosh(0.5 * s) ** 2
    h_star = forms.III.to_real() / np.sinh(0.5 * s) ** 2
    for name, g in (("h", h), ("h*", h_star)):
        low = np.linalg.eigvalsh(g)[forms.mask].min()
        if low <= atol:
            raise DegenerateForms("Metric %s is not positive definite (smallest eigenvalue %.3e)" % (name, low))
    return MetricField(grid, h), MetricField(grid, h_star)

def labourie_operator(B:OperatorField, s:float) -> OperatorField:
    """b = coth(s/2) B for the shape operator B of II = -<df, dn>"""
    return OperatorField(B.grid, B.values / np.tanh(0.5 * s), role='labourie')

def complex_structure(B:OperatorField, s:float) -> OperatorField:
    """J with J d_z = i coth(s/2) B d_z, in the real frame J = coth(s/2) B j0"""
    return OperatorField(B.grid, B.values @ J0 / np.tanh(0.5 * s), role='complex')

def explicit_complex_structure(m:MetricData, s:float) -> OperatorField:
    """J from the closed form coefficients

        J d_z = i H / tanh(s/2) d_z - 2i Q / (e^u - |Q|^2 e^-u) d_zbar

    with H = tr(B)/2 the mean curvature of the surface at e^{-s/2}.
    """
    m = m.rescale(s) if s != m.s else m
    forms = analytic_forms(m, np.exp(-0.5 * s))
    eu = np.exp(m.u)
    Q = forms.I.P
    a = 1j * forms.H / np.tanh(0.5 * s)
    c = -2j * Q / (eu - np.abs(Q) ** 2 / eu)
    Jc = np.empty(a.shape + (2, 2), dtype=complex)
    Jc[..., 0, 0], Jc[..., 1, 0] = a, c
    # J d_zbar is the conjugate of J d_z
    Jc[..., 0, 1], Jc[..., 1, 1] = np.conj(c), np.conj(a)
    J = TO_COMPLEX @ Jc @ np.linalg.inv(TO_COMPLEX)
    return OperatorField(m.grid, J.real, role='complex')

def beta_theta(J:OperatorField, b:OperatorField, theta:float) -> OperatorField:
    """beta_theta = cos(theta/2) E + sin(theta/2) J b"""
    values = np.cos(0.5 * theta) * np.eye(2) + np.sin(0.5 * theta) * (J.values @ b.values)
    return OperatorField(J.grid, values, role='rotation')

def beta_eigen_defect(beta:OperatorField, theta:float) -> float:
    """Deviation of beta_theta from acting as e^{i theta/2} on d_z and e^{-i theta/2} on d_zbar"""
    target = np.diag([np.exp(0.5j * theta), np.exp(-0.5j * theta)])
    return float(np.abs(beta.complexified() - target).max())

def landslide_act(
    h:MetricField,
    h_star:MetricField,
    b:OperatorField,
    J:OperatorField,
    theta:float
) -> tuple[MetricField, MetricField, OperatorField, OperatorField]:
    """Landslide by theta, returns (h_theta, h*_theta, b_theta, J_theta).

    The metrics are h(beta_theta., beta_theta.) and h(beta_{theta+pi}., beta_{theta+pi}.),
    the Labourie operator moves to beta_{-theta} b beta_theta and the
    complex structure to beta_theta^-1 J beta_theta, so that consecutive
    landslides compose.
    """
    beta = beta_theta(J, b, theta).values
    beta_pi = beta_theta(J, b, theta + np.pi).values
    beta_inv = beta_theta(J, b, -theta).values
    return (
        h.pullback(beta),
        h.pullback(beta_pi),
        OperatorField(b.grid, beta_inv @ b.values @ beta, role='labourie'),
        OperatorField(J.grid, np.linalg.inv(beta) @ J.values @ beta, role='complex')
    )

def forms_from_metrics(h:MetricField, h_star:MetricField, b:OperatorField, s:float, mask:np.ndarray) -> FundamentalForms:
    """Fundamental forms of the surface with metric pair (h, h*) and Labourie operator b"""
    ch2, t = np.cosh(0.5 * s) ** 2, np.tanh(0.5 * s)
    # II(X, Y) = I(B X, Y) with B = tanh(s/2) b
    second = ch2 * t * np.swapaxes(b.values, -1, -2) @ h.values
    return FundamentalForms(
        I=QuadraticForm.from_real(ch2 * h.values),
        II=QuadraticForm.from_real(second),
        III=QuadraticForm.from_real(np.sinh(0.5 * s) ** 2 * h_star.values),
        mask=mask
    )

def surface_data(m:MetricData, s:float) -> tuple[MetricField, MetricField, OperatorField, OperatorField, FundamentalForms]:
    """Metric pair, Labourie operator and complex structure of the surface at e^{-s/2}"""
    m = m.rescale(s) if s != m.s else m
    forms = analytic_forms(m, np.exp(-0.5 * s))
    B = OperatorField(m.grid, forms.shape_operator)
    h, h_star = metrics_from_forms(forms, s, m.grid)
    return h, h_star, labourie_operator(B, s), complex_structure(B, s), forms

def associated_check(m:MetricData, s:float, theta:float) -> dict:
    """Compare the landslide of the metric pair with the associated family member"""
    h, h_star, b, J, forms = surface_data(m, s)
    h_t, h_star_t, b_t, J_t = landslide_act(h, h_star, b, J, theta)
    landslid = forms_from_metrics(h_t, h_star_t, b_t, s, forms.mask)
    target = analytic_forms(m.rescale(s) if s != m.s else m, associated_value(s, theta))
    report = compare_forms(landslid, target)

    # two half steps against one full step
    half = landslide_act(h, h_star, b, J, 0.5 * theta)
    twice = landslide_act(*half, 0.5 * theta)
    additivity = max(
        float(np.abs(x.values - y.values).max())
        for x, y in zip(twice, (h_t, h_star_t, b_t, J_t))
    )
    report.update({
        "theta": theta,
        "codazzi_residual": codazzi_residual(b_t, h_t),
        "flow_additivity_err": additivity,
        "self_adjoint_err": self_adjoint_defect(b_t, h_t),
        "det_err": float(np.abs(np.linalg.det(b_t.values) - 1.0).max()),
        "curvature_err": curvature_defect(h_t)
    })
    logger.debug("Associated check at theta=%.4f: %s" % (theta, report))
    return report

def numeric_surface_data(mesh:SurfaceMesh) -> tuple[MetricField, MetricField, OperatorField, OperatorField, FundamentalForms]:
    """Metric pair, Labourie operator and complex structure read off a built surface.

    The forms come from finite differences of the immersion and its
    normal, so the structure equations only hold up to the O(h^2) error
    of the differences.
    """
    s = -2.0 * np.log(abs(mesh.lam))
    forms = numeric_forms(mesh)
    B = OperatorField(mesh.grid, forms.shape_operator)
    h, h_star = metrics_from_forms(forms, s, mesh.grid)
    return h, h_star, labourie_operator(B, s), complex_structure(B, s), forms

def numeric_landslide_report(mesh:SurfaceMesh) -> dict[str, float]:
    """Codazzi, determinant, self-adjointness and curvature defects of the numeric Labourie operator"""
    h, h_star, b, _, forms = numeric_surface_data(mesh)
    return {
        "lambda": mesh.lam,
        "codazzi_residual": codazzi_residual(b, h),
        "det_err": float(np.abs(np.linalg.det(b.values) - 1.0)[forms.mask].max()),
        "self_adjoint_err": self_adjoint_defect(b, h),
        "curvature_err": max(curvature_defect(h), curvature_defect(h_star))
    }
