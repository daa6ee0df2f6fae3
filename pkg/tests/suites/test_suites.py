import pytest
import numpy as np
from hyland.gauss import solve_profile_ode
from hyland.holonomy import QGrid
from hyland.suites import (
    VerificationContext,
    SuiteCollection,
    FlatnessSuiteConfig,
    FormsSuiteConfig,
    LandslideSuiteConfig,
    HolonomySuiteConfig,
    HolomorphySuiteConfig,
    GaugeSuiteConfig,
    CongruenceSuiteConfig
)

QS = [np.exp(-2.0), np.exp(-2 + 0.5j * np.pi), np.exp(-1 + 0.25j * np.pi), np.exp(-0.5 - 1j)]

@pytest.fixture(scope="module")
def ctx(coarse_profile) -> VerificationContext:
    return VerificationContext(
        data=coarse_profile,
        lambdas=[np.exp(-1.0)],
        thetas=[k * np.pi / 8 for k in range(4)],
        qs=QS,
        q_grid=QGrid(QS[1], size=5, delta=1e-3),
        jobs=2
    )

def run(config, ctx):
    result = SuiteCollection([config]).run(ctx)[0]
    assert result.error is None, result.error
    return result

def test_flatness_suite(ctx):
    result = run(FlatnessSuiteConfig(samples=4), ctx)
    assert result.passed, result.failures
    assert result.residuals["samples"] == 8
    assert result.residuals["twisted"]

def test_flatness_config():
    with pytest.raises(ValueError):
        FlatnessSuiteConfig(samples=0)
    with pytest.raises(ValueError):
        FlatnessSuiteConfig(inner_radius=1.0)

def test_forms_suite(profile):
    ctx = VerificationContext(
        data=profile,
        lambdas=[np.exp(-1.0)],
        resolve=lambda grid: solve_profile_ode(profile.s, 1.0, 0.5, Ly=grid.Ly, ny=grid.ny, nx=grid.nx, Lx=grid.Lx)
    )
    result = run(FormsSuiteConfig(phases=4, refine=True), ctx)
    assert result.passed, result.failures
    assert 3.5 <= result.residuals["refinement_ratio"] <= 4.5

def test_forms_refinement_needs_solver(ctx):
    with pytest.raises(RuntimeError):
        SuiteCollection([FormsSuiteConfig(phases=0, refine=True)]).run(ctx)

def test_landslide_suite(ctx):
    result = run(LandslideSuiteConfig(discretization_tolerance=1e-2, numeric=False), ctx)
    assert result.passed, result.failures
    assert len(result.residuals["cases"]) == 4
    assert "numeric_codazzi_residual" not in result.residuals

def test_landslide_suite_on_built_surface(profile):
    ctx = VerificationContext(
        data=profile,
        thetas=[0.0, np.pi / 2],
        resolve=lambda grid: solve_profile_ode(profile.s, 1.0, 0.5, Ly=grid.Ly, ny=grid.ny, nx=grid.nx, Lx=grid.Lx)
    )
    result = run(LandslideSuiteConfig(refine=True), ctx)
    assert result.passed, result.failures
    residuals = result.residuals
    assert 0 < residuals["numeric_codazzi_residual"] < 1e-2
    assert residuals["numeric_self_adjoint_err"] < 1e-6
    # second order differences shrink the residual four times per refinement
    assert 3.0 <= residuals["codazzi_refinement_ratio"] <= 5.0
    assert residuals["refined"]["codazzi_residual"] < residuals["numeric_codazzi_residual"]

def test_holonomy_suite(ctx):
    result = run(HolonomySuiteConfig(), ctx)
    assert result.passed, result.failures
    assert "oracle_err" in result.residuals

def test_holomorphy_suite(ctx):
    result = run(HolomorphySuiteConfig(), ctx)
    assert result.passed, result.failures
    assert "traces" not in result.residuals

def test_gauge_suite(ctx):
    result = run(GaugeSuiteConfig(), ctx)
    assert result.passed, result.failures
    assert len(result.residuals["cases"]) == len(QS)

def test_congruence_suite(ctx):
    result = run(CongruenceSuiteConfig(control_phase=np.pi / 3), ctx)
    assert result.passed, result.failures
    assert result.residuals["control_residual"] > 1e-3
