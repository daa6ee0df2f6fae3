import logging
import numpy as np
from dataclasses import dataclass
from typing import Literal
from scipy.linalg import expm
from .base import SuiteConfig, VerificationSuite, Bounds, worst
from .context import VerificationContext
from hyland.frames import ConnectionForm, loop_holonomy
from hyland.holonomy import (
    LandslideStructure,
    HolonomyRecord,
    complex_landslide,
    compare_holonomy
)

logger = logging.getLogger(__name__)

@dataclass
class HolonomySuiteConfig(SuiteConfig):
    """Holonomy of the complex landslide against the holonomy of the connection family.

    Attributes:
        tolerance (float): bound of the holonomy mismatch, its fixed point
            part and the mismatch against the loop around a second row
        equivariance_tolerance (float): bound of the developing map equivariance
        oracle_tolerance (float): bound of the distance to the matrix
            exponential on data independent of x
        flatness_tolerance (float): largest flatness residual a frame is
            integrated at
    """
    suite_type:Literal['holonomy'] = 'holonomy'
    tolerance:float = 1e-6
    equivariance_tolerance:float = 1e-8
    oracle_tolerance:float = 1e-9
    flatness_tolerance:float = 1e-6

def exponential_oracle(c:ConnectionForm, mu:complex, row:int) -> np.ndarray:
    """Holonomy around the x-loop for a connection constant along x"""
    ax, _ = c.evaluate(mu)
    return expm(c.grid.Lx * ax[0, row])

def branch_flip(c:ConnectionForm, record:HolonomyRecord, row:int, flatness_tol:float) -> float:
    """Mismatch of the conjugacy classes at mu and -mu"""
    flipped = HolonomyRecord(
        generator=record.generator,
        matrix=loop_holonomy(c, -record.mu, row=row, flatness_tol=flatness_tol),
        mu=-record.mu,
        q=record.q
    )
    # the twisted symmetry conjugates by diag(1, -1), only the classes agree
    return compare_holonomy(record, flipped, conjugation_invariant=True)

def sign_distance(a:np.ndarray, b:np.ndarray) -> float:
    return float(min(np.abs(a - b).max(), np.abs(a + b).max()))

class HolonomySuite(VerificationSuite):

    def limits(self) -> dict[str, Bounds]:
        return {
            "compare_residual": (None, self.config.tolerance),
            "fixed_point_residual": (None, self.config.tolerance),
            "transport_residual": (None, self.config.tolerance),
            "branch_flip_residual": (None, self.config.tolerance),
            "dev_equivariance": (None, self.config.equivariance_tolerance),
            "oracle_err": (None, self.config.oracle_tolerance)
        }

    def evaluate(self, ctx:VerificationContext) -> dict:
        m, c = ctx.data, ctx.connection
        row = m.grid.nearest_row(0.0)
        tol = self.config.flatness_tolerance

        def run(q:complex) -> dict:
            P:LandslideStructure = complex_landslide(m, q, row=row, flatness_tol=tol)
            frame = P.record('frame')
            report = P.report()
            report["branch_flip_residual"] = branch_flip(c, frame, row, tol)
            if ctx.is_x_independent:
                report["oracle_err"] = sign_distance(frame.matrix, exponential_oracle(c, frame.mu, row))
            return report

        reports = ctx.map(run, ctx.qs)
        residuals = {
            key: worst(reports, key)
            for key in self.limits()
            if any(key in r for r in reports)
        }
        residuals["cases"] = reports
        return residuals
