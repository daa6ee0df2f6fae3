import numpy as np
from dataclasses import dataclass
from .hermitian import UnitTangent, inv2

@dataclass(frozen=True)
class CP1Point(object):
    """Point (or field of points) of the complex projective line in homogeneous coordinates.

    Coordinates are stored with unit euclidean norm and the first nonzero
    entry real positive, so points compare by their chordal distance.
    """
    w:np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, 'w', normalize_cp1(self.w))

    @property
    def shape(self) -> tuple:
        return self.w.shape[:-1]

    def __getitem__(self, idx) -> "CP1Point":
        return CP1Point(self.w[idx])

    def affine(self) -> np.ndarray:
        """Affine coordinate w1/w2, infinite at [1:0]"""
        with np.errstate(divide='ignore', invalid='ignore'):
            return self.w[..., 0] / self.w[..., 1]

def normalize_cp1(w:np.ndarray, eps:float =1e-15) -> np.ndarray:
    w = np.asarray(w, dtype=complex)
    norm = np.linalg.norm(w, axis=-1, keepdims=True)
    if np.any(norm == 0):
        raise ValueError("[0:0] is not a point of the projective line")
    w = w / norm
    # rotate the first nonzero entry onto the positive real axis
    pivot = np.where(np.abs(w[..., :1]) > eps, w[..., :1], w[..., 1:])
    return w * (np.abs(pivot) / pivot)

def chordal_distance(p:CP1Point, q:CP1Point) -> np.ndarray:
    """|p ^ q| / (|p| |q|), in [0, 1]"""
    a, b = p.w, q.w
    return np.abs(a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0])

@dataclass(frozen=True)
class GeodesicLine(object):
    endpoint_plus:CP1Point
    endpoint_minus:CP1Point

    def check(self, atol:float =1e-10) -> None:
        if np.any(chordal_distance(self.endpoint_plus, self.endpoint_minus) <= atol):
            raise ValueError("Geodesic endpoints coincide")

def _eigenline(p:np.ndarray) -> np.ndarray:
    # image of a rank one projector, taken from its larger column
    c0, c1 = p[..., :, 0], p[..., :, 1]
    larger = np.linalg.norm(c0, axis=-1) >= np.linalg.norm(c1, axis=-1)
    return np.where(larger[..., None], c0, c1)

def geodesic_endpoints(t:UnitTangent) -> GeodesicLine:
    """Endpoints of the geodesic through x in direction v.

    Writing (x, v) = (g g^*, g e1 g^*) the map v x^-1 = g e1 g^-1 is an
    involution whose +1 and -1 eigenlines are the columns of g.
    """
    t.check()
    m = t.v @ inv2(t.x)
    eye = np.broadcast_to(np.eye(2, dtype=complex), m.shape)
    return GeodesicLine(
        endpoint_plus=CP1Point(_eigenline(0.5 * (eye + m))),
        endpoint_minus=CP1Point(_eigenline(0.5 * (eye - m)))
    )

def columns(g:np.ndarray) -> GeodesicLine:
    g = np.asarray(g, dtype=complex)
    return GeodesicLine(
        endpoint_plus=CP1Point(g[..., :, 0]),
        endpoint_minus=CP1Point(g[..., :, 1])
    )
