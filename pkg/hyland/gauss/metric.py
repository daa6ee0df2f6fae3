import os
import json
import numpy as np
from dataclasses import dataclass, replace
from .grid import DomainGrid

# e^{2u} - |Q|^2 must exceed this fraction of e^{2u}
NONDEGENERACY_MARGIN = 1e-6

def sigma_of(s:float) -> float:
    return float(np.tanh(0.5 * s))

def curvature_of(s:float) -> float:
    return float(-1.0 / np.cosh(0.5 * s) ** 2)

def s_of_curvature(K:float) -> float:
    if not (-1.0 < K < 0.0):
        raise ValueError("Curvature must lie in (-1, 0), got %s" % K)
    return float(2.0 * np.arccosh(np.sqrt(-1.0 / K)))

@dataclass(frozen=True)
class MetricData(object):
    """Discretized solution (u, Q) of the structure equations

        d_zbar d_z u + K/2 (e^u - |Q|^2 e^-u) = 0,    d_zbar Q = 0

    of a surface of constant curvature K = -1 + tanh^2(s/2).
    """
    grid:DomainGrid
    u:np.ndarray
    Q:np.ndarray
    s:float

    def __post_init__(self) -> None:
        if self.s <= 0:
            raise ValueError("Parameter s must be positive, got %s" % self.s)
        u = np.asarray(self.u, dtype=float)
        Q = np.broadcast_to(np.asarray(self.Q, dtype=complex), self.grid.shape).copy()
        if u.shape != self.grid.shape:
            raise ValueError("Field u has shape %s, expected %s" % (u.shape, self.grid.shape))
        object.__setattr__(self, 'u', u)
        object.__setattr__(self, 'Q', Q)

    @property
    def sigma(self) -> float:
        return sigma_of(self.s)

    @property
    def K(self) -> float:
        return curvature_of(self.s)

    @property
    def k(self) -> float:
        """Off-diagonal scale of the flat connection, sqrt(-K)/2"""
        return float(0.5 / np.cosh(0.5 * self.s))

    @property
    def spectral_radius(self) -> float:
        """Radius |lambda_0| = e^{-s/2} at which the family reproduces (u, Q)"""
        return float(np.exp(-0.5 * self.s))

    def nondegenerate_mask(self, margin:float =NONDEGENERACY_MARGIN) -> np.ndarray:
        e2u = np.exp(2.0 * self.u)
        return (e2u - np.abs(self.Q) ** 2) > margin * e2u

    @property
    def is_nondegenerate(self) -> bool:
        return bool(self.nondegenerate_mask().all())

    def rescale(self, s:float) -> "MetricData":
        """Same harmonic map data normalized for the curvature -1/cosh^2(s/2).

        (u + log c, c Q) with c = cosh^2(s/2) / cosh^2(s_0/2) solves the
        structure equation at the new curvature.
        """
        c = (np.cosh(0.5 * s) / np.cosh(0.5 * self.s)) ** 2
        return MetricData(self.grid, self.u + np.log(c), c * self.Q, s)

    def with_u(self, u:np.ndarray) -> "MetricData":
        return replace(self, u=u)

    def header(self) -> dict:
        return {
            "kind": self.grid.kind,
            "nx": self.grid.nx,
            "ny": self.grid.ny,
            "Lx": self.grid.Lx,
            "Ly": self.grid.Ly,
            "x0": self.grid.x0,
            "y0": self.grid.y0,
            "fd_order": self.grid.fd_order,
            "s": self.s,
            "K": self.K
        }

def gauss_residual(m:MetricData) -> np.ndarray:
    """Pointwise residual of the structure equation for u"""
    lap = m.grid.laplacian(m.u)
    nonlinear = np.exp(m.u) - np.abs(m.Q) ** 2 * np.exp(-m.u)
    return 0.25 * lap + 0.5 * m.K * nonlinear

def klotz_residual(Q:np.ndarray, grid:DomainGrid) -> float:
    """Sup-norm of d_zbar Q over the interior"""
    Q = np.broadcast_to(np.asarray(Q, dtype=complex), grid.shape)
    return grid.sup(grid.dzbar(Q))

def save_metric_data(m:MetricData, path:str) -> None:
    """Write the field dump `<path>.csv` and its header `<path>.json`"""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    i, j = np.meshgrid(np.arange(m.grid.nx), np.arange(m.grid.ny), indexing='ij')
    z = m.grid.z
    table = np.column_stack([
        i.ravel(), j.ravel(), z.real.ravel(), z.imag.ravel(),
        m.u.ravel(), m.Q.real.ravel(), m.Q.imag.ravel()
    ])
    np.savetxt(
        "%s.csv" % path, table, delimiter=',',
        header="i,j,x,y,u,re_Q,im_Q", comments='',
        fmt=['%d', '%d'] + ['%.17g'] * 5
    )
    with open("%s.json" % path, 'w+') as f:
        f.write(json.dumps(m.header(), indent=2))

def load_metric_data(path:str) -> MetricData:
    with open("%s.json" % path, 'r') as f:
        header = json.loads(f.read())
    grid = DomainGrid(
        header['kind'], header['nx'], header['ny'], header['Lx'], header['Ly'],
        x0=header.get('x0'), y0=header.get('y0'), fd_order=header.get('fd_order')
    )
    table = np.loadtxt("%s.csv" % path, delimiter=',', skiprows=1)
    u = table[:, 4].reshape(grid.shape)
    Q = (table[:, 5] + 1j * table[:, 6]).reshape(grid.shape)
    return MetricData(grid, u, Q, header['s'])
