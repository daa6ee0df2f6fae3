import pytest
import numpy as np
from hyland.gauss import DomainGrid
from hyland.landslide import (
    J0,
    MetricField,
    OperatorField,
    self_adjoint_defect,
    christoffel,
    codazzi_residual,
    metric_curvature,
    curvature_defect
)

@pytest.fixture
def grid() -> DomainGrid:
    return DomainGrid('patch', 129, 129, 1.0, 1.0)

def hyperbolic_metric(grid:DomainGrid) -> MetricField:
    # upper half plane metric, shifted into y > 0
    y = np.broadcast_to(grid.y[None, :] + 2.0, grid.shape)
    values = np.zeros(grid.shape + (2, 2))
    values[..., 0, 0] = values[..., 1, 1] = 1.0 / y ** 2
    return MetricField(grid, values)

def test_metric_check(grid):
    h = hyperbolic_metric(grid)
    h.check()
    with pytest.raises(ValueError):
        MetricField(grid, -h.values).check()

def test_operator_check(grid):
    rotation = OperatorField(grid, np.broadcast_to(J0, grid.shape + (2, 2)), role='complex')
    rotation.check()
    with pytest.raises(ValueError):
        OperatorField(grid, np.broadcast_to(2 * J0, grid.shape + (2, 2)), role='complex').check()
    with pytest.raises(ValueError):
        OperatorField(grid, np.broadcast_to(np.diag([2.0, 1.0]), grid.shape + (2, 2)), role='labourie').check()

def test_complexified_rotation(grid):
    J = OperatorField(grid, np.broadcast_to(J0, grid.shape + (2, 2)), role='complex')
    assert np.allclose(J.complexified(), np.diag([1j, -1j]))

def test_flat_christoffel(grid):
    h = MetricField(grid, np.broadcast_to(np.eye(2), grid.shape + (2, 2)).copy())
    assert np.allclose(christoffel(h), 0.0)
    assert np.allclose(metric_curvature(h), 0.0)

def test_hyperbolic_curvature(grid):
    h = hyperbolic_metric(grid)
    G = christoffel(h)
    y = grid.y[None, :] + 2.0
    # Gamma^x_xy = -1/y and Gamma^y_xx = 1/y
    assert np.allclose(G[2:-2, 2:-2, 0, 0, 1], -1.0 / y[:, 2:-2].repeat(125, axis=0), atol=1e-3)
    assert np.allclose(G[2:-2, 2:-2, 1, 0, 0], 1.0 / y[:, 2:-2].repeat(125, axis=0), atol=1e-3)
    assert curvature_defect(h, K=-1.0) < 1e-3

def test_identity_is_codazzi(grid):
    h = hyperbolic_metric(grid)
    E = OperatorField(grid, np.broadcast_to(np.eye(2), grid.shape + (2, 2)).copy(), role='labourie')
    assert codazzi_residual(E, h) < 1e-10
    assert self_adjoint_defect(E, h) == 0.0

def test_non_codazzi_operator(grid):
    h = hyperbolic_metric(grid)
    x = np.broadcast_to(grid.x[:, None], grid.shape)
    values = np.zeros(grid.shape + (2, 2))
    values[..., 0, 0], values[..., 1, 1] = 1.0 + x, 1.0
    assert codazzi_residual(OperatorField(grid, values), h) > 0.1
