import pytest
import numpy as np
from hyland.gauss import DomainGrid, MetricData, solve_profile_ode
from hyland.frames import build_connection, integrate_frame
from hyland.surface import (
    QuadraticForm,
    spectral_immersion,
    numeric_forms,
    analytic_forms,
    spectral_curvature,
    compare_forms,
    form_report
)
from hyland.errors import DegenerateData

def surface(m:MetricData, lam:complex):
    return spectral_immersion(integrate_frame(build_connection(m), lam), m.grid)

def test_quadratic_form_real_matrix():
    form = QuadraticForm(P=np.array([0.3 - 0.2j]), E=np.array([2.0]))
    M = form.to_real()
    assert np.allclose(M, [[[2.6, 0.4], [0.4, 1.4]]])
    back = QuadraticForm.from_real(M)
    assert np.allclose(back.P, form.P) and np.allclose(back.E, form.E)

@pytest.mark.parametrize("r", [0.1, np.exp(-1.0), 0.9])
def test_spectral_curvature(r):
    K = spectral_curvature(r)
    assert -1 < K < 0
    # the spectral radius e^{-s/2} gives the curvature -1/cosh^2(s/2)
    s = -2 * np.log(r)
    assert np.isclose(K, -1 / np.cosh(0.5 * s) ** 2)

def test_analytic_forms_reproduce_data(profile):
    forms = analytic_forms(profile, profile.spectral_radius)
    eu = np.exp(profile.u)
    assert np.allclose(forms.I.P, profile.Q)
    assert np.allclose(forms.I.E, eu + 1 / eu)
    assert np.allclose(forms.gaussian_curvature, profile.K)
    assert np.allclose(forms.mean_curvature, forms.H)

def test_analytic_forms_reject_degenerate_data():
    grid = DomainGrid('cylinder', 8, 8, 1.0, 1.0)
    m = MetricData(grid, np.zeros(grid.shape), np.ones(grid.shape), 2.0)
    with pytest.raises(DegenerateData):
        analytic_forms(m, 0.3)

def test_form_report(mesh, profile):
    report = form_report(mesh, profile)
    for name in ("I", "II", "III"):
        assert report["max_err_%s" % name] < 1e-3
    K = -(2 * np.exp(-1) / (np.exp(-2) + 1)) ** 2
    assert np.isclose(report["K_formula"], K)
    assert abs(report["K_numeric"] - K) < 1e-3
    assert report["K_max_err"] < 1e-3
    assert report["H_max_err"] < 1e-3
    assert report["klotz_residual"] < 1e-3

@pytest.mark.parametrize("r", [0.2, 0.6])
def test_forms_at_other_radii(connection, profile, r):
    mesh = spectral_immersion(integrate_frame(connection, r * np.exp(0.4j)), profile.grid)
    report = form_report(mesh, profile)
    assert max(report["max_err_I"], report["max_err_II"], report["max_err_III"]) < 1e-3
    assert report["K_max_err"] < 1e-3

def test_second_form_is_phase_independent(connection, mesh):
    forms = [
        numeric_forms(spectral_immersion(integrate_frame(connection, mesh.lam * np.exp(2j * np.pi * k / 8)), mesh.grid))
        for k in range(8)
    ]
    for f in forms[1:]:
        assert np.abs(f.II.distance(forms[0].II)[f.mask]).max() < 1e-3

def test_numeric_forms_converge():
    errors = []
    for n in (64, 128):
        m = solve_profile_ode(2.0, 1.0, 0.5, Ly=1.0, ny=n, nx=n, Lx=1.0)
        numeric = numeric_forms(surface(m, np.exp(-1.0)))
        report = compare_forms(numeric, analytic_forms(m, np.exp(-1.0)))
        errors.append(max(report.values()))
    assert 3.5 <= errors[0] / errors[1] <= 4.5
