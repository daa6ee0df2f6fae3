import numpy as np
from dataclasses import dataclass

# basis of the hermitian model of minkowski space
E0 = np.eye(2, dtype=complex)
E1 = np.diag([1.0, -1.0]).astype(complex)
E2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
E3 = np.array([[0, 1], [1, 0]], dtype=complex)
BASIS = (E0, E1, E2, E3)

def dagger(m:np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))

def det2(m:np.ndarray) -> np.ndarray:
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]

def inv2(m:np.ndarray) -> np.ndarray:
    """Inverse of (a stack of) 2x2 matrices via the adjugate"""
    adj = np.empty_like(m)
    adj[..., 0, 0] = m[..., 1, 1]
    adj[..., 1, 1] = m[..., 0, 0]
    adj[..., 0, 1] = -m[..., 0, 1]
    adj[..., 1, 0] = -m[..., 1, 0]
    return adj / det2(m)[..., None, None]

def normalize_sl2(m:np.ndarray) -> np.ndarray:
    """Rescale (a stack of) matrices to unit determinant"""
    m = np.asarray(m, dtype=complex)
    return m / np.sqrt(det2(m))[..., None, None]

def from_coordinates(xi:np.ndarray) -> np.ndarray:
    xi = np.asarray(xi, dtype=float)
    return np.einsum('...j,jab->...ab', xi.astype(complex), np.stack(BASIS))

def to_coordinates(m:np.ndarray) -> np.ndarray:
    a, d = m[..., 0, 0].real, m[..., 1, 1].real
    return np.stack([
        0.5 * (a + d),
        0.5 * (a - d),
        -m[..., 0, 1].imag,
        m[..., 0, 1].real
    ], axis=-1)

def minkowski_inner(xi:np.ndarray, eta:np.ndarray) -> np.ndarray:
    """<xi, eta> = -1/2 tr(xi e2 eta^t e2), signature (1, 3) with <xi, xi> = -det xi"""
    prod = xi @ E2 @ np.swapaxes(eta, -1, -2) @ E2
    return -0.5 * np.trace(prod, axis1=-2, axis2=-1).real

@dataclass(frozen=True)
class UnitTangent(object):
    """Point x of hyperbolic space with a unit tangent vector v at x"""
    x:np.ndarray
    v:np.ndarray

    def check(self, atol:float =1e-10) -> None:
        if not np.allclose(det2(self.x), 1.0, atol=atol):
            raise ValueError("Point is not on the hyperboloid, det x != 1")
        if np.any(np.trace(self.x, axis1=-2, axis2=-1).real <= 0):
            raise ValueError("Point is on the lower sheet, tr x <= 0")
        if not np.allclose(det2(self.v), -1.0, atol=atol):
            raise ValueError("Tangent vector is not a unit vector, det v != -1")
        if not np.allclose(minkowski_inner(self.x, self.v), 0.0, atol=atol):
            raise ValueError("Tangent vector is not orthogonal to its base point")

def project_to_h3(g:np.ndarray) -> np.ndarray:
    g = np.asarray(g, dtype=complex)
    return g @ dagger(g)

def unit_tangent_of_frame(g:np.ndarray) -> UnitTangent:
    g = np.asarray(g, dtype=complex)
    return UnitTangent(
        x=g @ dagger(g),
        v=g @ E1 @ dagger(g)
    )

def hyperbolic_distance(x:np.ndarray, y:np.ndarray) -> np.ndarray:
    # <x - y, x - y> = 4 sinh^2(d/2) on the hyperboloid
    gap = -det2(np.asarray(x) - np.asarray(y)).real
    return 2.0 * np.arcsinh(0.5 * np.sqrt(np.maximum(gap, 0.0)))

def to_poincare_ball(x:np.ndarray) -> np.ndarray:
    xi = to_coordinates(x)
    return xi[..., 1:] / (1.0 + xi[..., :1])
