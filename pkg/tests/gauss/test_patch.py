import os
import pytest
import numpy as np
from hyland.gauss import (
    DomainGrid,
    MetricData,
    solve_patch,
    harmonic_extension,
    evaluate_polynomial,
    gauss_residual,
    klotz_residual,
    save_metric_data,
    load_metric_data
)
from hyland.errors import DegenerateSolution

@pytest.fixture(scope="module")
def patch_grid():
    return DomainGrid('patch', 33, 33, 1.0, 1.0)

@pytest.fixture(scope="module")
def patch(patch_grid):
    return solve_patch([0.2, 0.1], 2.0, patch_grid, boundary=0.5)

def test_harmonic_extension(patch_grid):
    # linear functions are discretely harmonic
    z = patch_grid.z
    boundary = 1.0 + z.real - 2.0 * z.imag
    u = harmonic_extension(patch_grid, boundary)
    assert np.allclose(u, boundary, atol=1e-10)

def test_polynomial(patch_grid):
    Q = evaluate_polynomial([1.0, 0.0, 2.0j], patch_grid)
    assert np.allclose(Q, 1.0 + 2.0j * patch_grid.z ** 2)

def test_patch_solution(patch):
    assert patch.grid.sup(gauss_residual(patch)) < 1e-9
    assert klotz_residual(patch.Q, patch.grid) < 1e-12
    assert patch.is_nondegenerate
    # dirichlet values are kept
    assert np.allclose(patch.u[0], 0.5) and np.allclose(patch.u[:, -1], 0.5)

def test_patch_rejects_cylinder():
    grid = DomainGrid('cylinder', 16, 16, 1.0, 1.0)
    with pytest.raises(ValueError):
        solve_patch([1.0], 2.0, grid, boundary=0.5)

def test_degenerate_patch(patch_grid):
    # e^{2u} < |Q|^2 along the boundary
    with pytest.raises(DegenerateSolution) as info:
        solve_patch([3.0], 2.0, patch_grid, boundary=0.0)
    assert info.value.data is not None

def test_save_and_load(patch, tmp_path):
    path = os.path.join(tmp_path, "metric")
    save_metric_data(patch, path)
    assert os.path.isfile(path + ".csv") and os.path.isfile(path + ".json")
    loaded = load_metric_data(path)
    assert loaded.grid == patch.grid
    assert np.allclose(loaded.u, patch.u, rtol=0, atol=1e-15)
    assert np.allclose(loaded.Q, patch.Q, rtol=0, atol=1e-15)

def liouville(grid, s:float) -> np.ndarray:
    """log(4 / (|K| (1 - |z|^2)^2)), the Q = 0 solution on the unit disk"""
    K = -1.0 / np.cosh(0.5 * s) ** 2
    return np.log(4.0 / (abs(K) * (1.0 - np.abs(grid.z) ** 2) ** 2))

def test_liouville_solution_is_exact():
    grid = DomainGrid('patch', 65, 65, 0.8, 0.8)
    m = MetricData(grid, liouville(grid, 2.0), np.zeros(grid.shape, dtype=complex), 2.0)
    # second order differences of the closed form
    assert grid.sup(gauss_residual(m)) < 1e-2

def test_patch_converges_to_liouville():
    errors = []
    for n in (33, 65):
        grid = DomainGrid('patch', n, n, 0.8, 0.8)
        exact = liouville(grid, 2.0)
        m = solve_patch([0.0], 2.0, grid, boundary=exact)
        errors.append(np.abs(m.u - exact).max())
    assert errors[1] < 1e-3
    assert 3.5 <= errors[0] / errors[1] <= 4.5

def test_constant_equilibrium_is_flagged(patch_grid):
    # Q = 2 and u = log 2 on the boundary, e^{2u} = |Q|^2 everywhere
    with pytest.raises(DegenerateSolution) as info:
        solve_patch([2.0], 2.0, patch_grid, boundary=np.log(2.0))
    m = info.value.data
    assert np.allclose(m.u, np.log(2.0), atol=1e-10)
    assert not m.nondegenerate_mask().any()
