import numpy as np
from dataclasses import dataclass, field
from hyland.frames import ExtendedFrame
from hyland.surface import check_spectral_value
from hyland.algebra import CP1Point, MoebiusMap, moebius_apply, chordal_distance

@dataclass(frozen=True)
class DevelopingMap(object):
    """Developing map sampled on the (possibly multi-period) node grid of a frame"""
    points:CP1Point
    mu:complex
    periods:int = 1
    provenance:dict = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, int]:
        return self.points.shape

    def local_injectivity(self) -> float:
        """Smallest chordal distance between neighbouring nodes"""
        w = self.points
        return float(min(
            chordal_distance(w[1:, :], w[:-1, :]).min(),
            chordal_distance(w[:, 1:], w[:, :-1]).min()
        ))

def developing_map(F:ExtendedFrame, **provenance) -> DevelopingMap:
    """[F11 : F21] at every node, the first endpoint of the lagrangian gauss map"""
    check_spectral_value(F.lam)
    return DevelopingMap(
        points=CP1Point(F.F[..., :, 0]),
        mu=F.lam,
        periods=F.periods,
        provenance=provenance
    )

def period_pairs(dev:DevelopingMap, max_pairs:None|int =None) -> tuple[CP1Point, CP1Point]:
    """Pairs (dev(x, y), dev(x + Lx, y)) over the first period"""
    if dev.periods < 2:
        raise ValueError("Developing map must cover at least two periods, got %i" % dev.periods)
    n = dev.shape[0] // dev.periods
    src, dst = dev.points.w[:n], dev.points.w[n:2*n]
    src, dst = src.reshape(-1, 2), dst.reshape(-1, 2)
    if (max_pairs is not None) and (src.shape[0] > max_pairs):
        idx = np.linspace(0, src.shape[0] - 1, max_pairs).astype(int)
        src, dst = src[idx], dst[idx]
    return CP1Point(src), CP1Point(dst)

def dev_equivariance(dev:DevelopingMap, H:np.ndarray) -> float:
    """Sup of the chordal distance between dev(x + Lx, y) and H dev(x, y)"""
    src, dst = period_pairs(dev)
    return float(chordal_distance(moebius_apply(MoebiusMap(H), src), dst).max())
