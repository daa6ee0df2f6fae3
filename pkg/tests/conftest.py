import pytest
import numpy as np
from hyland.gauss import DomainGrid, MetricData, solve_profile_ode
from hyland.frames import build_connection, integrate_frame
from hyland.surface import spectral_immersion

# default fixture: cylinder profile with s = 2, Q = 1, u0 = 0.5
S, Q0, U0 = 2.0, 1.0, 0.5
LAMBDA_0 = float(np.exp(-1.0))

@pytest.fixture(scope="session")
def profile() -> MetricData:
    return solve_profile_ode(S, Q0, U0, Ly=1.0, ny=128, nx=128, Lx=1.0)

@pytest.fixture(scope="session")
def coarse_profile() -> MetricData:
    return solve_profile_ode(S, Q0, U0, Ly=1.0, ny=32, nx=32, Lx=1.0)

@pytest.fixture(scope="session")
def connection(profile):
    return build_connection(profile)

@pytest.fixture(scope="session")
def coarse_connection(coarse_profile):
    return build_connection(coarse_profile)

@pytest.fixture(scope="session")
def frame(connection):
    return integrate_frame(connection, LAMBDA_0)

@pytest.fixture(scope="session")
def mesh(frame, profile):
    return spectral_immersion(frame, profile.grid)

@pytest.fixture(scope="session")
def constant_data() -> MetricData:
    """Constant coefficients, not a solution of the structure equations"""
    grid = DomainGrid('cylinder', 16, 16, 1.0, 1.0)
    return MetricData(grid, np.full(grid.shape, 0.3), np.full(grid.shape, 0.5 + 0.0j), 2.0)
