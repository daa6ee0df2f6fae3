import logging
import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import spsolve
from numpy.polynomial import polynomial
from .grid import DomainGrid
from .metric import MetricData, curvature_of, gauss_residual
from hyland.errors import NoConvergence, DegenerateSolution

logger = logging.getLogger(__name__)

def _second_difference(n:int, h:float) -> sp.spmatrix:
    return sp.diags([1.0, -2.0, 1.0], [-1, 0, 1], shape=(n, n)) / h**2

def interior_laplacian(grid:DomainGrid) -> sp.csr_matrix:
    """5-point laplacian acting on the interior unknowns of a patch grid"""
    mx, my = grid.nx - 2, grid.ny - 2
    return (
        sp.kron(_second_difference(mx, grid.hx), sp.identity(my)) +
        sp.kron(sp.identity(mx), _second_difference(my, grid.hy))
    ).tocsr()

def harmonic_extension(grid:DomainGrid, boundary:np.ndarray) -> np.ndarray:
    """Solve the discrete Laplace equation with the given edge values"""
    u = np.array(np.broadcast_to(boundary, grid.shape), dtype=float)
    u[1:-1, 1:-1] = 0.0
    # contribution of the edge values to the interior stencils
    rhs = -grid.laplacian(u)[1:-1, 1:-1].ravel()
    u[1:-1, 1:-1] = spsolve(interior_laplacian(grid), rhs).reshape(grid.nx - 2, grid.ny - 2)
    return u

def evaluate_polynomial(coeffs:list[complex], grid:DomainGrid) -> np.ndarray:
    return polynomial.polyval(grid.z, np.asarray(coeffs, dtype=complex))

def solve_patch(
    Qpoly:list[complex],
    s:float,
    grid:DomainGrid,
    boundary:float|np.ndarray,
    tol:float =1e-9,
    max_iter:int =50
) -> MetricData:
    """Dirichlet problem for the structure equation on a rectangle patch by damped Newton iteration"""
    if grid.is_periodic:
        raise ValueError("Patch solver expects a patch grid, got %s" % grid.kind)
    if grid.fd_order != 2:
        raise ValueError("Patch solver discretizes with the 5-point laplacian, got order %i" % grid.fd_order)

    K = curvature_of(s)
    Q = evaluate_polynomial(Qpoly, grid)
    q2 = np.abs(Q[1:-1, 1:-1]) ** 2
    L = interior_laplacian(grid)

    u = harmonic_extension(grid, boundary)
    m = MetricData(grid, u, Q, s)

    def residual(m:MetricData) -> np.ndarray:
        return gauss_residual(m)[1:-1, 1:-1]

    r = residual(m)
    for it in range(max_iter):
        err = np.abs(r).max()
        logger.debug("Newton iteration %i, residual %.3e" % (it, err))
        if err < tol:
            break
        ui = m.u[1:-1, 1:-1]
        jac = 0.25 * L + sp.diags((0.5 * K * (np.exp(ui) + q2 * np.exp(-ui))).ravel())
        step = spsolve(jac.tocsc(), -r.ravel()).reshape(ui.shape)
        # backtracking on the residual norm
        t = 1.0
        while True:
            u = m.u.copy()
            u[1:-1, 1:-1] += t * step
            trial = m.with_u(u)
            r_trial = residual(trial)
            if (np.linalg.norm(r_trial) < np.linalg.norm(r)) or (t < 1e-4):
                break
            t *= 0.5
        m, r = trial, r_trial
    else:
        raise NoConvergence("Newton iteration did not converge in %i steps (residual %.3e)" % (max_iter, np.abs(r).max()))

    logger.info("Patch solve converged after %i iterations, residual %.3e" % (it, np.abs(r).max()))
    if not m.is_nondegenerate:
        n = int((~m.nondegenerate_mask()).sum())
        raise DegenerateSolution("Solution degenerates at %i nodes (e^{2u} <= |Q|^2)" % n, data=m)
    return m
