import logging
import numpy as np
from dataclasses import dataclass
from typing import Literal
from .base import SuiteConfig, VerificationSuite, Bounds, worst
from .context import VerificationContext
from hyland.gauss import MetricData
from hyland.frames import build_connection, integrate_frame
from hyland.surface import SurfaceMesh, spectral_immersion, numeric_forms, form_report

logger = logging.getLogger(__name__)

@dataclass
class FormsSuiteConfig(SuiteConfig):
    """Fundamental forms and curvature of the spectral surfaces.

    Attributes:
        tolerance (float): bound of the numeric against analytic form mismatch
        curvature_tolerance (float): bound of the curvature, mean curvature
            and klotz residuals
        phases (int): number of phases the second fundamental form is
            compared across, 0 to skip
        refine (bool): repeat the first spectral value on the data solved
            on a grid with twice the resolution
        ratio_bounds (tuple[float, float]): accepted error ratio of the refinement
    """
    suite_type:Literal['forms'] = 'forms'
    tolerance:float = 1e-3
    curvature_tolerance:float = 1e-3
    phases:int = 8
    refine:bool = False
    ratio_bounds:tuple[float, float] = (3.5, 4.5)

def surface_at(m:MetricData, lam:complex, flatness_tol:float =1e-6) -> SurfaceMesh:
    F = integrate_frame(build_connection(m), lam, flatness_tol=flatness_tol)
    return spectral_immersion(F, m.grid)

class FormsSuite(VerificationSuite):

    def limits(self) -> dict[str, Bounds]:
        tol, ktol = self.config.tolerance, self.config.curvature_tolerance
        return {
            "max_err_I": (None, tol),
            "max_err_II": (None, tol),
            "max_err_III": (None, tol),
            "II_phase_err": (None, tol),
            "K_max_err": (None, ktol),
            "H_max_err": (None, ktol),
            "klotz_residual": (None, ktol),
            "refinement_ratio": self.config.ratio_bounds
        }

    def phase_defect(self, m:MetricData, lam:complex) -> float:
        """Sup of the change of II when the spectral value is rotated"""
        n = self.config.phases
        forms = [
            numeric_forms(surface_at(m, lam * np.exp(2j * np.pi * k / n)))
            for k in range(n)
        ]
        ref = forms[0]
        return max(
            float(f.II.distance(ref.II)[f.mask & ref.mask].max())
            for f in forms[1:]
        )

    def evaluate(self, ctx:VerificationContext) -> dict:
        m = ctx.data
        reports = ctx.map(lambda lam: form_report(surface_at(m, lam), m), ctx.lambdas)
        residuals = {
            key: worst(reports, key)
            for key in ("max_err_I", "max_err_II", "max_err_III", "K_max_err", "H_max_err", "klotz_residual")
        }
        residuals["cases"] = reports

        if (self.config.phases > 1) and (len(ctx.lambdas) > 0):
            residuals["II_phase_err"] = self.phase_defect(m, ctx.lambdas[0])

        if self.config.refine and (len(ctx.lambdas) > 0):
            lam = ctx.lambdas[0]
            fine = ctx.refined()
            coarse_err = max(reports[0]["max_err_%s" % k] for k in ("I", "II", "III"))
            fine_report = form_report(surface_at(fine, lam), fine)
            fine_err = max(fine_report["max_err_%s" % k] for k in ("I", "II", "III"))
            residuals["refinement_ratio"] = coarse_err / fine_err if fine_err > 0 else float('inf')
            residuals["refined"] = fine_report
            logger.info("Refinement %ix%i -> %ix%i shrinks the form error by %.3f" % (
                *m.grid.shape, *fine.grid.shape, residuals["refinement_ratio"]))
        return residuals
