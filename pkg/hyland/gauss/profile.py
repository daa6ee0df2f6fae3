import logging
import numpy as np
from scipy.integrate import solve_ivp
from .grid import DomainGrid, MIN_NODES
from .metric import MetricData, curvature_of
from hyland.errors import DegenerateProfile

logger = logging.getLogger(__name__)

# profiles are abandoned once u reaches this value
BLOW_UP = 50.0
# the band is cut down to a grid of its own, which needs MIN_NODES rows
MIN_ROWS = MIN_NODES

def first_integral(u:np.ndarray, du:np.ndarray, s:float, Q0:complex) -> np.ndarray:
    """E = (u')^2/8 + K/2 (e^u + |Q0|^2 e^-u), constant along profiles"""
    K = curvature_of(s)
    return du ** 2 / 8.0 + 0.5 * K * (np.exp(u) + abs(Q0) ** 2 * np.exp(-u))

def integrate_profile(
    s:float,
    Q0:complex,
    u0:float,
    y:np.ndarray,
    rtol:float =1e-13,
    atol:float =1e-13
) -> tuple[np.ndarray, np.ndarray, float]:
    """Even solution of u''/4 + K/2 (e^u - |Q0|^2 e^-u) = 0 with u(0) = u0, u'(0) = 0.

    Returns u and u' at the requested ordinates together with the
    half-width of the interval on which the solution exists.
    """
    K = curvature_of(s)
    q2 = abs(Q0) ** 2

    def rhs(t, state):
        u, du = state
        return [du, -2.0 * K * (np.exp(u) - q2 * np.exp(-u))]

    def blow_up(t, state):
        return state[0] - BLOW_UP
    blow_up.terminal = True

    y = np.asarray(y, dtype=float)
    t_max = float(np.abs(y).max())
    # steps no longer than the node spacing keep the dense output at the solver tolerance
    sol = solve_ivp(
        rhs, (0.0, t_max), [u0, 0.0],
        method='DOP853', rtol=rtol, atol=atol,
        max_step=t_max / max(y.size - 1, 1),
        dense_output=True, events=blow_up
    )
    if sol.status == -1:
        logger.warning("Profile integration stopped early: %s" % sol.message)
    t_end = float(sol.t[-1])
    # even extension, nodes beyond the existence interval are left undefined
    t = np.minimum(np.abs(y), t_end)
    u, du = sol.sol(t)
    du = np.sign(y) * du
    undefined = np.abs(y) > t_end
    u[undefined] = np.nan
    du[undefined] = np.nan
    return u, du, t_end

def solve_profile_ode(
    s:float,
    Q0:complex,
    u0:float,
    Ly:float,
    ny:int,
    nx:None|int =None,
    Lx:float =1.0,
    margin:float =1e-6
) -> MetricData:
    """x-independent solution of the structure equations on a cylinder with Q = Q0"""
    if s <= 0:
        raise ValueError("Parameter s must be positive, got %s" % s)
    if (Q0 != 0) and (u0 <= np.log(abs(Q0)) + margin):
        raise DegenerateProfile(
            "Initial value u0=%.6g does not exceed log|Q0|=%.6g, the profile is degenerate" % (u0, np.log(abs(Q0)))
        )

    grid = DomainGrid('cylinder', nx or ny, ny, Lx, Ly)
    u, _, t_end = integrate_profile(s, Q0, u0, grid.y)

    # symmetric band of rows with a defined and nondegenerate profile
    with np.errstate(invalid='ignore'):
        valid = np.isfinite(u) & (np.exp(2.0 * u) - abs(Q0) ** 2 > margin * np.exp(2.0 * u))
    rows = np.flatnonzero(valid & valid[::-1])
    if rows.size < MIN_ROWS:
        raise DegenerateProfile(
            "Nondegenerate band has %i rows, a grid of the band needs at least %i (half-width %.4g)" % (rows.size, MIN_ROWS, t_end)
        )
    if rows.size < grid.ny:
        logger.warning("Profile restricted to %i of %i rows (existence half-width %.4f)" % (rows.size, grid.ny, t_end))
        j0, j1 = rows[0], rows[-1]
        grid = DomainGrid(
            'cylinder', grid.nx, j1 - j0 + 1, grid.Lx, (j1 - j0) * grid.hy,
            y0=float(grid.y[j0]), fd_order=grid.fd_order
        )
        u = u[j0:j1+1]

    logger.info("Solved profile with s=%.4g, Q0=%s, u0=%.4g on %ix%i grid" % (s, Q0, u0, grid.nx, grid.ny))
    return MetricData(
        grid=grid,
        u=np.broadcast_to(u[None, :], grid.shape).copy(),
        Q=np.full(grid.shape, Q0, dtype=complex),
        s=s
    )
