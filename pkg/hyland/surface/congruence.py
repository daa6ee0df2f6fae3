import logging
import numpy as np
from scipy.linalg import expm, sqrtm
from scipy.optimize import least_squares
from .mesh import SurfaceMesh
from hyland.algebra import SL2_BASIS, E1, dagger, inv2, normalize_sl2, hyperbolic_distance

logger = logging.getLogger(__name__)

def frame_of(x:np.ndarray, v:np.ndarray) -> np.ndarray:
    """Some g in SL(2, C) with g g^* = x and g e1 g^* = v"""
    root = sqrtm(x)
    # v pulled back to the identity point is a unit tangent vector there
    w = inv2(root) @ v @ dagger(inv2(root))
    _, vecs = np.linalg.eigh(0.5 * (w + dagger(w)))
    k = vecs[:, ::-1]
    return normalize_sl2(root @ k)

def congruence_check(
    mesh1:SurfaceMesh,
    mesh2:SurfaceMesh,
    tol:float =1e-15,
    max_nodes:int =4096
) -> tuple[np.ndarray, float]:
    """Rigid motion g minimizing the distances between g f1 g^* and f2.

    The seed aligns the point and normal at the first node, the
    least squares refinement runs over the real parameters of sl(2, C)
    on an evenly strided subset of the nodes. The residual is the RMS
    hyperbolic distance over all nodes.
    """
    if mesh1.shape != mesh2.shape:
        raise ValueError("Meshes differ in shape, %s != %s" % (mesh1.shape, mesh2.shape))

    f1, f2 = mesh1.f.reshape(-1, 2, 2), mesh2.f.reshape(-1, 2, 2)
    # seed the motion with the one matching the first point and normal
    seed = frame_of(mesh2.f[0, 0], mesh2.n[0, 0]) @ inv2(frame_of(mesh1.f[0, 0], mesh1.n[0, 0]))
    # subsample large meshes
    stride = max(1, f1.shape[0] // max_nodes)
    a, b = f1[::stride], f2[::stride]

    def motion(t:np.ndarray) -> np.ndarray:
        return seed @ expm(np.tensordot(t, SL2_BASIS, axes=1))

    def residuals(t:np.ndarray) -> np.ndarray:
        g = motion(t)
        r = (g @ a @ dagger(g) - b).ravel()
        return np.concatenate([r.real, r.imag])

    result = least_squares(residuals, np.zeros(6), xtol=tol, ftol=tol, gtol=tol, method='lm')
    g = normalize_sl2(motion(result.x))
    # rms hyperbolic distance after the fitted motion
    dist = hyperbolic_distance(g @ f1 @ dagger(g), f2)
    residual = float(np.sqrt(np.mean(dist ** 2)))
    logger.debug("Congruence fit residual %.3e after %i evaluations" % (residual, result.nfev))
    return g, residual
