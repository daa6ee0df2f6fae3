import logging
import numpy as np
from dataclasses import dataclass, field
from .develop import DevelopingMap, developing_map, dev_equivariance
from .records import (
    HolonomyRecord,
    principal_sqrt,
    frame_holonomy_at_sqrt_q,
    dev_holonomy,
    compare_holonomy,
    fixed_point_distance
)
from .scan import QGrid, holomorphy_scan
from hyland.gauss import MetricData
from hyland.frames import build_connection, integrate_frame
from hyland.landslide import associated_check
from hyland.surface import spectral_curvature

logger = logging.getLogger(__name__)

# |q| this close to one is treated as the boundary circle
BOUNDARY_ATOL = 1e-12

@dataclass(frozen=True)
class LandslideStructure(object):
    """Complex landslide P_q of one source surface"""
    q:complex
    dev:None|DevelopingMap
    records:list[HolonomyRecord]
    residuals:dict = field(default_factory=dict)

    @property
    def s(self) -> float:
        return float(-np.log(abs(self.q)))

    @property
    def theta(self) -> float:
        return float(-np.angle(self.q))

    @property
    def mu(self) -> complex:
        return principal_sqrt(self.q)

    @property
    def on_boundary(self) -> bool:
        return abs(abs(self.q) - 1.0) <= BOUNDARY_ATOL

    def record(self, source:str) -> None|HolonomyRecord:
        return next((r for r in self.records if r.source == source), None)

    def report(self) -> dict:
        frame, dev = self.record('frame'), self.record('dev')
        report = {
            "q": self.q,
            "s": self.s,
            "theta": self.theta,
            "mu": self.mu,
            "trace_frame": frame.trace if frame is not None else None,
            "trace_dev": dev.trace if dev is not None else None
        }
        report.update(self.residuals)
        return report

def complex_landslide(
    m:MetricData,
    q:complex,
    q_grid:None|QGrid =None,
    row:None|int =None,
    flatness_tol:float =1e-6,
    jobs:int =1
) -> LandslideStructure:
    """Landslide by theta = -arg q followed by grafting at s = -log|q|.

    The projective structure is developed from the frame at mu = sqrt(q),
    and its holonomy is compared with the holonomy of the flat
    connection family at the same spectral value. On the unit circle
    only the frame holonomy is produced.

    Both the developing map and the frame holonomy transport along the
    basepoint row with the same Magnus steps, so on that row the two
    records agree by construction. The fit runs over every row of the
    first period and only matches when the data is flat. The loop
    around a second row, a transport the developing map never uses, is
    compared up to conjugation as `transport_residual`.
    """
    if not (0 < abs(q) <= 1 + BOUNDARY_ATOL):
        raise ValueError("Parameter q must lie in the closed punctured unit disk, got %s" % q)
    if not m.grid.is_periodic:
        raise ValueError("Complex landslide holonomy requires a cylinder grid, got %s" % m.grid.kind)

    c = build_connection(m)
    row = m.grid.nearest_row(0.0) if row is None else row
    frame_record = frame_holonomy_at_sqrt_q(c, q, row=row, flatness_tol=flatness_tol)

    if abs(abs(q) - 1.0) <= BOUNDARY_ATOL:
        logger.warning("Parameter q=%s lies on the unit circle, producing holonomy records only" % q)
        return LandslideStructure(q=q, dev=None, records=[frame_record])

    s, theta = -np.log(abs(q)), -np.angle(q)
    landslide = associated_check(m, s, theta)

    F = integrate_frame(c, frame_record.mu, basepoint=(0, row), periods=2, flatness_tol=flatness_tol)
    dev = developing_map(F, q=q, s=s, theta=theta)
    dev_record, fit = dev_holonomy(dev)
    # a quarter of the band away from the basepoint row
    other_row = min(row + max(m.grid.ny // 4, 1), m.grid.ny - 1)
    other_record = frame_holonomy_at_sqrt_q(c, q, row=other_row, flatness_tol=flatness_tol)

    residuals = {
        "compare_residual": compare_holonomy(frame_record, dev_record),
        "trace_residual": compare_holonomy(frame_record, dev_record, conjugation_invariant=True),
        "fixed_point_residual": fixed_point_distance(frame_record, dev_record),
        "transport_residual": compare_holonomy(other_record, dev_record, conjugation_invariant=True),
        "dev_fit_residual": fit,
        "dev_equivariance": dev_equivariance(dev, frame_record.matrix),
        "dev_injectivity": dev.local_injectivity(),
        "landslide_max_err_I": landslide["max_err_I"],
        "landslide_max_err_II": landslide["max_err_II"],
        "landslide_max_err_III": landslide["max_err_III"],
        "K_surface": spectral_curvature(frame_record.mu)
    }
    if q_grid is not None:
        residuals["cr_residual"] = holomorphy_scan(c, q_grid, row=row, jobs=jobs)["cr_residual"]

    logger.info("Complex landslide at q=%s: holonomy mismatch %.3e" % (q, residuals["compare_residual"]))
    return LandslideStructure(q=q, dev=dev, records=[frame_record, dev_record], residuals=residuals)
