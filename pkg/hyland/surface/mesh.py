import numpy as np
from dataclasses import dataclass
from hyland.gauss import DomainGrid
from hyland.frames import ExtendedFrame
from hyland.algebra import (
    E1,
    det2,
    dagger,
    minkowski_inner,
    UnitTangent,
    GeodesicLine,
    columns
)
from hyland.errors import SpectralOnCircle

@dataclass(frozen=True)
class SurfaceMesh(object):
    """Sampled immersion f into hyperbolic space together with its unit normal n.

    Both are fields of hermitian matrices indexed like the frame they
    were built from, with node spacing taken from `grid`.
    """
    grid:DomainGrid
    f:np.ndarray
    n:np.ndarray
    lam:complex

    @property
    def shape(self) -> tuple[int, int]:
        return self.f.shape[:2]

    def check(self, atol:float =1e-8) -> None:
        if np.abs(det2(self.f) - 1.0).max() > atol:
            raise ValueError("Mesh points leave the hyperboloid, det f != 1")
        if np.any(np.trace(self.f, axis1=-2, axis2=-1).real <= 0):
            raise ValueError("Mesh points lie on the lower sheet")
        if np.abs(det2(self.n) + 1.0).max() > atol:
            raise ValueError("Normals are not unit vectors, det n != -1")
        if np.abs(minkowski_inner(self.f, self.n)).max() > atol:
            raise ValueError("Normals are not orthogonal to the surface points")

def check_spectral_value(lam:complex) -> None:
    r = abs(lam)
    if not (0.0 < r < 1.0):
        raise SpectralOnCircle("Spectral value %s must lie in the punctured unit disk (|lambda|=%.6g)" % (lam, r))

def spectral_immersion(F:ExtendedFrame, grid:DomainGrid) -> SurfaceMesh:
    """f = F F^*, n = F e1 F^* of a frame evaluated inside the unit disk"""
    check_spectral_value(F.lam)
    G = F.F
    return SurfaceMesh(
        grid=grid,
        f=G @ dagger(G),
        n=G @ E1 @ dagger(G),
        lam=F.lam
    )

def gauss_maps(F:ExtendedFrame) -> tuple[UnitTangent, GeodesicLine]:
    """Legendrian map (f, n) and Lagrangian map f ^ n, the latter from the columns of F"""
    check_spectral_value(F.lam)
    G = F.F
    legendrian = UnitTangent(x=G @ dagger(G), v=G @ E1 @ dagger(G))
    return legendrian, columns(G)
