from dataclasses import dataclass
from typing import Literal
from .base import SuiteConfig, VerificationSuite, Bounds
from .context import VerificationContext
from hyland.holonomy import holomorphy_scan

@dataclass
class HolomorphySuiteConfig(SuiteConfig):
    suite_type:Literal['holomorphy'] = 'holomorphy'
    tolerance:float = 1e-5
    # the conjugated trace has to fail the test by this much
    control_threshold:float = 1e-2

class HolomorphySuite(VerificationSuite):
    """Cauchy-Riemann test of the untwisted holonomy trace on the q-grid of the run"""

    def limits(self) -> dict[str, Bounds]:
        return {
            "cr_residual": (None, self.config.tolerance),
            "control_residual": (self.config.control_threshold, None)
        }

    def evaluate(self, ctx:VerificationContext) -> dict:
        if ctx.q_grid is None:
            raise RuntimeError("Holomorphy suite requires a q-grid")
        scan = holomorphy_scan(ctx.connection, ctx.q_grid, row=ctx.data.grid.nearest_row(0.0), jobs=ctx.jobs)
        scan.pop("traces")
        return scan
