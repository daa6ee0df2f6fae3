import numpy as np
from dataclasses import dataclass
from typing import Literal
from .base import SuiteConfig, VerificationSuite, Bounds, worst
from .context import VerificationContext
from hyland.frames import integrate_frame
from hyland.surface import spectral_immersion, congruence_check

@dataclass
class CongruenceSuiteConfig(SuiteConfig):
    """Surfaces at lambda and -lambda differ by a rigid motion.

    Attributes:
        tolerance (float): bound of the RMS distance after the best fit motion
        control_phase (None|float): when set, also fit the surface at
            lambda e^{i control_phase}, which must stay at least
            `control_threshold` away
    """
    suite_type:Literal['congruence'] = 'congruence'
    tolerance:float = 1e-8
    control_phase:None|float = None
    control_threshold:float = 1e-3

class CongruenceSuite(VerificationSuite):

    def limits(self) -> dict[str, Bounds]:
        return {
            "congruence_residual": (None, self.config.tolerance),
            "control_residual": (self.config.control_threshold, None)
        }

    def evaluate(self, ctx:VerificationContext) -> dict:
        c, grid = ctx.connection, ctx.data.grid
        mesh = lambda lam: spectral_immersion(integrate_frame(c, lam), grid)

        def run(lam:complex) -> dict:
            base = mesh(lam)
            report = {"lambda": lam, "congruence_residual": congruence_check(base, mesh(-lam))[1]}
            if self.config.control_phase is not None:
                other = mesh(lam * np.exp(1j * self.config.control_phase))
                report["control_residual"] = congruence_check(base, other)[1]
            return report

        reports = ctx.map(run, ctx.lambdas)
        residuals = {"congruence_residual": worst(reports, "congruence_residual"), "cases": reports}
        if self.config.control_phase is not None:
            residuals["control_residual"] = float(min(r["control_residual"] for r in reports)) if reports else 0.0
        return residuals
