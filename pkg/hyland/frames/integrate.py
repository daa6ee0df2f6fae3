import os
import logging
import numpy as np
from dataclasses import dataclass
from scipy.linalg import expm
from scipy.interpolate import CubicSpline
from typing import Literal
from .connection import ConnectionForm, flatness_residual, gauge_matrix
from hyland.algebra import normalize_sl2, det2, E1, dagger
from hyland.errors import FlatnessTooLarge

logger = logging.getLogger(__name__)

# nodes of the two point gauss rule on [0, 1]
GAUSS_NODES = (0.5 - np.sqrt(3) / 6, 0.5 + np.sqrt(3) / 6)

@dataclass(frozen=True)
class ExtendedFrame(object):
    """Frame F with F^-1 dF = alpha^lambda, normalized to the identity at the basepoint.

    On a cylinder the frame may cover several x-periods of the
    universal cover, in which case the first axis has `periods * nx`
    entries.
    """
    lam:complex
    F:np.ndarray
    basepoint:tuple[int, int]
    periods:int = 1

    @property
    def det_defect(self) -> float:
        return float(np.abs(det2(self.F) - 1.0).max())

    @property
    def reality_defect(self) -> float:
        """Sup of |F^* e1 F - e1|, zero for frames in SU(1, 1)"""
        return float(np.abs(dagger(self.F) @ E1 @ self.F - E1).max())

    def fundamental_domain(self) -> np.ndarray:
        n = self.F.shape[0] // self.periods
        return self.F[:n]

@dataclass(frozen=True)
class UntwistedFrame(ExtendedFrame):
    """Twisted frame conjugated by the gauge D^mu, F_hat = D^{1/mu} F D^mu"""
    mu:complex = 1.0

def _gauss_values(values:np.ndarray, h:float, steps:int, periodic:bool) -> tuple[np.ndarray, np.ndarray]:
    # real and imaginary parts are splined separately
    n = values.shape[0]
    t = h * np.arange(n + 1 if periodic else n)
    data = np.concatenate([values, values[:1]], axis=0) if periodic else values
    data = np.stack([data.real, data.imag], axis=-1)
    spline = CubicSpline(t, data, axis=0, bc_type='periodic' if periodic else 'not-a-knot')
    start = h * np.arange(steps)
    out = []
    for c in GAUSS_NODES:
        v = spline(start + c * h)
        out.append(v[..., 0] + 1j * v[..., 1])
    return out[0], out[1]

def transport(values:np.ndarray, h:float, steps:None|int =None, periodic:bool =False) -> np.ndarray:
    """Solutions of dP/dt = P a(t), P(0) = id, at the nodes t = k h.

    `values` holds a(t) at the nodes along the first axis and any number
    of independent lines along the following axes. Each step is a fourth
    order Magnus step with the two point gauss rule; node values are
    interpolated by cubic splines, periodic ones wrapping around.
    """
    n = values.shape[0]
    steps = (n if periodic else n - 1) if steps is None else steps
    if not periodic and steps > n - 1:
        raise ValueError("Cannot take %i steps along a line of %i nodes" % (steps, n))

    P = np.empty((steps + 1,) + values.shape[1:], dtype=complex)
    P[0] = np.eye(2)
    if steps == 0:
        return P

    a1, a2 = _gauss_values(values, h, steps, periodic)
    omega = 0.5 * h * (a1 + a2) + (np.sqrt(3) / 12) * h**2 * (a1 @ a2 - a2 @ a1)
    step = expm(omega)
    for k in range(steps):
        P[k + 1] = P[k] @ step[k]
    return P

def _transport_both_ways(values:np.ndarray, h:float, start:int, periodic:bool, count:None|int =None) -> np.ndarray:
    # forward from `start` to the end (or `count` nodes), backward to node 0
    n = values.shape[0]
    count = (n - start) if count is None else count
    if periodic:
        forward = transport(np.roll(values, -start, axis=0), h, steps=count - 1, periodic=True)
    else:
        forward = transport(values[start:], h, steps=count - 1)
    backward = transport(-values[start::-1], h) if start > 0 else forward[:0]
    return np.concatenate([backward[:0:-1], forward], axis=0)

def check_flatness(c:ConnectionForm, lam:complex, tol:float) -> None:
    res = flatness_residual(c, lam)
    if res > tol:
        raise FlatnessTooLarge("Flatness residual %.3e at lambda=%s exceeds %.1e" % (res, lam, tol))

def integrate_frame(
    c:ConnectionForm,
    lam:complex,
    basepoint:None|tuple[int, int] =None,
    periods:int =1,
    flatness_tol:float =1e-6
) -> ExtendedFrame:
    """Integrate dF = F alpha^lambda up the basepoint column, then along the rows"""
    grid = c.grid
    if basepoint is None:
        basepoint = (0, grid.nearest_row(0.0))
    i0, j0 = basepoint
    if (periods > 1) and not grid.is_periodic:
        raise ValueError("Several periods require a cylinder grid, got %s" % grid.kind)
    check_flatness(c, lam, flatness_tol)

    ax, ay = c.evaluate(lam)
    column = _transport_both_ways(ay[i0], grid.hy, j0, periodic=False)
    column = normalize_sl2(column)

    # rows as independent lines along the first axis
    if grid.is_periodic:
        rows = _transport_both_ways(ax, grid.hx, i0, periodic=True, count=periods * grid.nx - i0)
    else:
        rows = _transport_both_ways(ax, grid.hx, i0, periodic=False)
    F = normalize_sl2(column[None] @ rows)

    logger.debug("Integrated frame at lambda=%s, det drift %.3e" % (lam, np.abs(det2(column[None] @ rows) - 1).max()))
    return ExtendedFrame(lam=lam, F=F, basepoint=basepoint, periods=periods)

def loop_holonomy(
    c:ConnectionForm,
    lam:complex,
    loop:Literal['x', 'trivial'] ='x',
    row:None|int =None,
    flatness_tol:float =1e-6
) -> np.ndarray:
    """Holonomy H with F(z + Lx) = H F(z) for the frame based on `row`.

    The `trivial` loop runs around a contractible rectangle of a quarter
    of the grid and returns the identity up to the flatness defect.
    """
    grid = c.grid
    j0 = grid.nearest_row(0.0) if row is None else row
    check_flatness(c, lam, flatness_tol)
    ax, ay = c.evaluate(lam)

    if loop == 'trivial':
        di, dj = grid.nx // 4, min(grid.ny // 4, grid.ny - 1 - j0)
        right = transport(ax[:di + 1, j0], grid.hx)[-1]
        up = transport(ay[di, j0:j0 + dj + 1], grid.hy)[-1]
        left = transport(-ax[di::-1, j0 + dj], grid.hx)[-1]
        down = transport(-ay[0, j0 + dj:j0 - 1 if j0 > 0 else None:-1], grid.hy)[-1]
        return normalize_sl2(right @ up @ left @ down)

    if not grid.is_periodic:
        raise ValueError("The x-loop requires a cylinder grid, got %s" % grid.kind)
    return normalize_sl2(transport(ax[:, j0], grid.hx, periodic=True)[-1])

def untwist_frame(F:ExtendedFrame, convention:Literal['lower', 'upper'] ='lower') -> UntwistedFrame:
    """F_hat = D^{1/mu} F D^mu with D^mu = diag(mu^{-1/2}, mu^{1/2})"""
    if F.lam == 0:
        raise ValueError("Spectral value must be nonzero")
    d = gauge_matrix(F.lam, convention)
    return UntwistedFrame(
        lam=F.lam ** 2,
        F=np.linalg.inv(d) @ F.F @ d,
        basepoint=F.basepoint,
        periods=F.periods,
        mu=F.lam
    )

def save_frame(F:ExtendedFrame, path:str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    n, m = F.F.shape[:2]
    i, j = np.meshgrid(np.arange(n), np.arange(m), indexing='ij')
    entries = F.F.reshape(n * m, 4)
    table = np.column_stack([i.ravel(), j.ravel()] + [
        part for e in entries.T for part in (e.real, e.imag)
    ])
    header = "i,j," + ",".join(
        "%s_%s" % (part, name) for name in ("F11", "F12", "F21", "F22") for part in ("re", "im")
    )
    np.savetxt(path, table, delimiter=',', header=header, comments='', fmt=['%d', '%d'] + ['%.17g'] * 8)
