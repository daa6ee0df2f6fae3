import logging
import numpy as np
from dataclasses import dataclass
from scipy.linalg import expm
from scipy.optimize import least_squares
from .hermitian import normalize_sl2, inv2
from .cp1 import CP1Point, chordal_distance
from hyland.errors import DegenerateConfiguration

logger = logging.getLogger(__name__)

# real basis of sl(2, C)
SL2_BASIS = np.array([
    [[1, 0], [0, -1]],
    [[0, 1], [0, 0]],
    [[0, 0], [1, 0]],
    [[1j, 0], [0, -1j]],
    [[0, 1j], [0, 0]],
    [[0, 0], [1j, 0]]
], dtype=complex)

@dataclass(frozen=True)
class MoebiusMap(object):
    """Moebius transformation represented by a unit-determinant matrix, up to sign"""
    matrix:np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, 'matrix', normalize_sl2(self.matrix))

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(inv2(self.matrix))

    def __matmul__(self, other:"MoebiusMap") -> "MoebiusMap":
        return MoebiusMap(self.matrix @ other.matrix)

    def fixed_points(self) -> CP1Point:
        # eigenvectors of the representative, repeated for parabolic maps
        _, vecs = np.linalg.eig(self.matrix)
        return CP1Point(vecs.T)

def moebius_apply(m:MoebiusMap, p:CP1Point) -> CP1Point:
    return CP1Point(np.einsum('ab,...b->...a', m.matrix, p.w))

def three_point_map(src:CP1Point, dst:CP1Point) -> MoebiusMap:
    """Unique Moebius map sending the three source points to the three target points"""

    def from_standard(p:np.ndarray) -> np.ndarray:
        # sends [1:0], [0:1], [1:1] to p[0], p[1], p[2]
        c = np.linalg.solve(p[:2].T, p[2])
        return p[:2].T * c[None, :]

    a = from_standard(src.w)
    b = from_standard(dst.w)
    return MoebiusMap(b @ np.linalg.inv(a))

def _spread_triple(src:CP1Point) -> tuple[int, int, int]:
    i0 = 0
    d0 = chordal_distance(src[i0], src)
    i1 = int(np.argmax(d0))
    d1 = chordal_distance(src[i1], src)
    i2 = int(np.argmax(np.minimum(d0, d1)))
    return i0, i1, i2

def moebius_fit(
    src:CP1Point,
    dst:CP1Point,
    min_separation:float =1e-6,
    tol:float =1e-15
) -> MoebiusMap:
    """Least squares Moebius map m with m.src ~ dst in the chordal metric.

    The fit is seeded by the exact map through three well separated
    pairs and refined over the six real parameters of sl(2, C).
    """
    if src.shape != dst.shape:
        raise ValueError("Source and target point sets differ in shape, %s != %s" % (src.shape, dst.shape))
    src = CP1Point(src.w.reshape(-1, 2))
    dst = CP1Point(dst.w.reshape(-1, 2))
    if src.shape[0] < 3:
        raise DegenerateConfiguration("Moebius fit requires at least 3 pairs, got %i" % src.shape[0])

    idx = list(_spread_triple(src))
    sep = min(
        float(chordal_distance(src[idx[i]], src[idx[j]]))
        for i, j in ((0, 1), (0, 2), (1, 2))
    )
    if sep <= min_separation:
        raise DegenerateConfiguration("Source points nearly coincide (separation %.3e)" % sep)

    seed = three_point_map(src[idx], dst[idx])

    def residuals(t:np.ndarray) -> np.ndarray:
        m = seed.matrix @ expm(np.tensordot(t, SL2_BASIS, axes=1))
        a = src.w @ m.T
        a = a / np.linalg.norm(a, axis=-1, keepdims=True)
        r = a[:, 0] * dst.w[:, 1] - a[:, 1] * dst.w[:, 0]
        return np.concatenate([r.real, r.imag])

    result = least_squares(residuals, np.zeros(6), xtol=tol, ftol=tol, gtol=tol, method='lm')
    logger.debug("Moebius fit over %i pairs, rms residual %.3e" % (src.shape[0], np.sqrt(np.mean(result.fun ** 2))))
    return MoebiusMap(seed.matrix @ expm(np.tensordot(result.x, SL2_BASIS, axes=1)))

def fit_residual(m:MoebiusMap, src:CP1Point, dst:CP1Point) -> float:
    return float(np.max(chordal_distance(moebius_apply(m, src), dst)))

def conjugation_distance(a:np.ndarray, b:np.ndarray) -> float:
    """Distance between conjugacy classes of PSL(2, C) elements"""
    ta, tb = np.trace(normalize_sl2(a)), np.trace(normalize_sl2(b))
    return float(min(abs(ta - tb), abs(ta + tb)))
