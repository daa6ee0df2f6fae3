import numpy as np
from dataclasses import dataclass
from typing import Literal
from hyland.gauss import DomainGrid

# rotation by +pi/2 in the conformal (x, y) frame, j0 d_z = i d_z
J0 = np.array([[0.0, -1.0], [1.0, 0.0]])
# columns are d_z and d_zbar in the (d_x, d_y) frame
TO_COMPLEX = np.array([[0.5, 0.5], [-0.5j, 0.5j]])

def _grad(f:np.ndarray, grid:DomainGrid, axis:int) -> np.ndarray:
    h = grid.hx if axis == 0 else grid.hy
    return np.gradient(f, h, axis=axis, edge_order=2)

def _interior(shape:tuple[int, int], width:int) -> np.ndarray:
    mask = np.zeros(shape, dtype=bool)
    mask[width:shape[0]-width, width:shape[1]-width] = True
    return mask

@dataclass(frozen=True)
class MetricField(object):
    """Riemannian metric in the (d_x, d_y) frame, values of shape (nx, ny, 2, 2)"""
    grid:DomainGrid
    values:np.ndarray

    def check(self, atol:float =1e-10) -> None:
        if np.abs(self.values - np.swapaxes(self.values, -1, -2)).max() > atol:
            raise ValueError("Metric field is not symmetric")
        if np.linalg.eigvalsh(self.values).min() <= atol:
            raise ValueError("Metric field is not positive definite")

    def pullback(self, op:np.ndarray) -> "MetricField":
        """h(op., op.)"""
        return MetricField(self.grid, np.swapaxes(op, -1, -2) @ self.values @ op)

@dataclass(frozen=True)
class OperatorField(object):
    """Field of real 2x2 operators acting on (d_x, d_y) components"""
    grid:DomainGrid
    values:np.ndarray
    role:Literal['labourie', 'complex', 'rotation', 'shape'] ='shape'

    def check(self, h:None|MetricField =None, atol:float =1e-8) -> None:
        if self.role in ('labourie', 'rotation'):
            if np.abs(np.linalg.det(self.values) - 1.0).max() > atol:
                raise ValueError("%s operator does not have unit determinant" % self.role.capitalize())
        if self.role == 'complex':
            if np.abs(self.values @ self.values + np.eye(2)).max() > atol:
                raise ValueError("Complex structure does not square to -1")
        if (self.role == 'labourie') and (h is not None):
            if self_adjoint_defect(self, h) > atol:
                raise ValueError("Labourie operator is not self-adjoint")

    def complexified(self) -> np.ndarray:
        """Matrix of the operator in the (d_z, d_zbar) basis"""
        return np.linalg.inv(TO_COMPLEX) @ self.values @ TO_COMPLEX

def self_adjoint_defect(op:OperatorField, h:MetricField) -> float:
    # h(op X, Y) - h(X, op Y)
    M = np.swapaxes(op.values, -1, -2) @ h.values
    return float(np.abs(M - np.swapaxes(M, -1, -2)).max())

def christoffel(h:MetricField) -> np.ndarray:
    """Gamma[..., k, i, j] of the Levi-Civita connection of h"""
    g = h.values
    dg = np.stack([_grad(g, h.grid, 0), _grad(g, h.grid, 1)], axis=-3)
    # dg[..., l, i, j] = d_l g_ij
    first = 0.5 * (dg + np.swapaxes(dg, -3, -1) - np.swapaxes(dg, -3, -2))
    # first[..., i, l, j] = 1/2 (d_i g_lj + d_j g_li - d_l g_ij)
    return np.einsum('...kl,...ilj->...kij', np.linalg.inv(g), first)

def codazzi_residual(op:OperatorField, h:MetricField, width:int =2) -> float:
    """Sup-norm of the exterior covariant derivative of op with respect to h.

    In coordinates (d^nabla op)(d_x, d_y) has the components
    d_x op^k_y - d_y op^k_x + Gamma^k_xl op^l_y - Gamma^k_yl op^l_x.
    """
    b = op.values
    G = christoffel(h)
    R = (
        _grad(b[..., :, 1], h.grid, 0) - _grad(b[..., :, 0], h.grid, 1) +
        np.einsum('...kl,...l->...k', G[..., :, 0, :], b[..., :, 1]) -
        np.einsum('...kl,...l->...k', G[..., :, 1, :], b[..., :, 0])
    )
    mask = _interior(b.shape[:2], width)
    return float(np.abs(R).max(axis=-1)[mask].max())

def metric_curvature(h:MetricField) -> np.ndarray:
    """Gaussian curvature of h by the Brioschi formula"""
    E, F, G = h.values[..., 0, 0], h.values[..., 0, 1], h.values[..., 1, 1]
    d = lambda f, axis: _grad(f, h.grid, axis)
    Ex, Ey, Fx, Fy, Gx, Gy = d(E, 0), d(E, 1), d(F, 0), d(F, 1), d(G, 0), d(G, 1)
    Eyy, Fxy, Gxx = d(Ey, 1), d(Fx, 1), d(Gx, 0)

    def det3(rows:list[list[np.ndarray]]) -> np.ndarray:
        M = np.stack([np.stack(np.broadcast_arrays(*r), axis=-1) for r in rows], axis=-2)
        return np.linalg.det(M)

    a = det3([
        [-0.5 * Eyy + Fxy - 0.5 * Gxx, 0.5 * Ex, Fx - 0.5 * Ey],
        [Fy - 0.5 * Gx, E, F],
        [0.5 * Gy, F, G]
    ])
    b = det3([
        [np.zeros_like(E), 0.5 * Ey, 0.5 * Gx],
        [0.5 * Ey, E, F],
        [0.5 * Gx, F, G]
    ])
    return (a - b) / (E * G - F ** 2) ** 2

def curvature_defect(h:MetricField, K:float =-1.0, width:int =3) -> float:
    mask = _interior(h.values.shape[:2], width)
    return float(np.abs(metric_curvature(h) - K)[mask].max())
