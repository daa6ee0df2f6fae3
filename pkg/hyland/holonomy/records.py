import logging
import numpy as np
from dataclasses import dataclass
from .develop import DevelopingMap, period_pairs
from hyland.frames import ConnectionForm, loop_holonomy
from hyland.algebra import (
    CP1Point,
    MoebiusMap,
    moebius_fit,
    fit_residual,
    normalize_sl2,
    chordal_distance,
    conjugation_distance
)

logger = logging.getLogger(__name__)

def sign_class(matrix:np.ndarray) -> np.ndarray:
    """Representative of {M, -M} with the largest entry in the right half plane"""
    M = normalize_sl2(matrix)
    pivot = M.ravel()[np.argmax(np.abs(M))]
    return -M if (pivot.real < 0) or (pivot.real == 0 and pivot.imag < 0) else M

@dataclass(frozen=True)
class HolonomyRecord(object):
    """Holonomy of one generator, a unit determinant matrix up to sign"""
    generator:str
    matrix:np.ndarray
    mu:complex
    q:None|complex = None
    source:str = 'frame'

    def __post_init__(self) -> None:
        object.__setattr__(self, 'matrix', sign_class(self.matrix))

    @property
    def moebius(self) -> MoebiusMap:
        return MoebiusMap(self.matrix)

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

def principal_sqrt(q:complex) -> complex:
    return complex(np.sqrt(complex(q)))

def frame_holonomy_at_sqrt_q(c:ConnectionForm, q:complex, row:None|int =None, flatness_tol:float =1e-6) -> HolonomyRecord:
    """Holonomy of the frame family around the x-loop at mu = sqrt(q)"""
    if not (0 < abs(q) <= 1 + 1e-12):
        raise ValueError("Parameter q must lie in the closed punctured unit disk, got %s" % q)
    mu = principal_sqrt(q)
    H = loop_holonomy(c, mu, loop='x', row=row, flatness_tol=flatness_tol)
    return HolonomyRecord(generator='x', matrix=H, mu=mu, q=q, source='frame')

def dev_holonomy(dev:DevelopingMap, max_pairs:int =512) -> tuple[HolonomyRecord, float]:
    """Moebius fit of dev(x + Lx, y) against dev(x, y), with the fit residual"""
    src, dst = period_pairs(dev, max_pairs=max_pairs)
    m = moebius_fit(src, dst)
    residual = fit_residual(m, src, dst)
    logger.debug("Developing map holonomy fitted over %i pairs, residual %.3e" % (src.shape[0], residual))
    q = dev.provenance.get('q')
    return HolonomyRecord(generator='x', matrix=m.matrix, mu=dev.mu, q=q, source='dev'), residual

def fixed_point_distance(a:HolonomyRecord, b:HolonomyRecord) -> float:
    """Chordal distance between the unordered fixed point pairs of two records"""
    pa, pb = a.moebius.fixed_points(), b.moebius.fixed_points()
    direct = chordal_distance(pa, pb).max()
    swapped = chordal_distance(pa, CP1Point(pb.w[::-1])).max()
    return float(min(direct, swapped))

def compare_holonomy(a:HolonomyRecord, b:HolonomyRecord, conjugation_invariant:bool =False) -> float:
    """Distance between two holonomy records of the same generator.

    By default the trace distance min |tr a -+ tr b| is added to the
    chordal distance between the fixed point sets, which tells apart
    elements with equal traces such as a parabolic and the identity.
    Records taken at different basepoints only agree up to conjugation
    and are compared with `conjugation_invariant=True`, the trace term
    alone.
    """
    if a.generator != b.generator:
        raise ValueError("Cannot compare holonomies of generators %s and %s" % (a.generator, b.generator))
    d = conjugation_distance(a.matrix, b.matrix)
    if not conjugation_invariant:
        d += fixed_point_distance(a, b)
    return float(d)
