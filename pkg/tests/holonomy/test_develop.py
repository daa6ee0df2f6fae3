import pytest
import numpy as np
from hyland.frames import integrate_frame, loop_holonomy
from hyland.holonomy import developing_map, period_pairs, dev_equivariance, dev_holonomy, compare_holonomy, frame_holonomy_at_sqrt_q
from hyland.errors import SpectralOnCircle

MU = float(np.exp(-1.0))

@pytest.fixture(scope="module")
def dev(coarse_connection):
    row = coarse_connection.grid.nearest_row(0.0)
    F = integrate_frame(coarse_connection, MU, basepoint=(0, row), periods=2)
    return developing_map(F, q=MU ** 2)

def test_developing_map_covers_two_periods(dev, coarse_connection):
    assert dev.shape == (2 * coarse_connection.grid.nx, coarse_connection.grid.ny)
    assert dev.provenance["q"] == MU ** 2
    assert dev.local_injectivity() > 0

def test_equivariance(dev, coarse_connection):
    H = loop_holonomy(coarse_connection, MU)
    assert dev_equivariance(dev, H) < 1e-8
    assert dev_equivariance(dev, np.eye(2)) > 1e-3

def test_fitted_holonomy(dev, coarse_connection):
    record, residual = dev_holonomy(dev)
    assert residual < 1e-8
    assert record.source == 'dev'
    frame = frame_holonomy_at_sqrt_q(coarse_connection, MU ** 2)
    assert compare_holonomy(frame, record) < 1e-6

def test_period_pairs(dev, coarse_connection):
    src, dst = period_pairs(dev, max_pairs=100)
    assert src.shape == dst.shape == (100,)
    with pytest.raises(ValueError):
        period_pairs(developing_map(integrate_frame(coarse_connection, MU)))

def test_developing_map_inside_disk(coarse_connection):
    with pytest.raises(SpectralOnCircle):
        developing_map(integrate_frame(coarse_connection, 1j))
