import logging
import numpy as np
from dataclasses import dataclass, field
from typing import Literal
from .base import SuiteConfig, VerificationSuite, Bounds, worst
from .context import VerificationContext
from .forms import surface_at
from hyland.landslide import (
    surface_data,
    explicit_complex_structure,
    beta_theta,
    beta_eigen_defect,
    associated_check,
    numeric_landslide_report,
    self_adjoint_defect,
    codazzi_residual,
    curvature_defect
)

logger = logging.getLogger(__name__)

@dataclass
class LandslideSuiteConfig(SuiteConfig):
    """Complex structure, Labourie operator and landslide flow of the source surface.

    Attributes:
        tolerance (float): bound of the form, eigen, determinant and self-adjointness defects
        structure_tolerance (float): bound of J^2 + E and of the flow additivity
        discretization_tolerance (float): bound of the finite difference
            Codazzi and curvature residuals
        thetas (list[float]): landslide angles used when the run lists none
        numeric (bool): also check the Labourie operator of the surface
            built from the data, with forms read off the immersion
        numeric_tolerance (float): bound of the Codazzi and determinant
            defects of the built surface, its curvature is only reported
        refine (bool): repeat the built surface check on the data solved
            on a grid with twice the resolution
        ratio_bounds (tuple[float, float]): accepted shrink factor of the
            Codazzi residual of the built surface under refinement
    """
    suite_type:Literal['landslide'] = 'landslide'
    tolerance:float = 1e-6
    structure_tolerance:float = 1e-8
    discretization_tolerance:float = 1e-3
    thetas:list[float] = field(default_factory=lambda: [k * np.pi / 8 for k in range(16)])
    numeric:bool = True
    numeric_tolerance:float = 1e-2
    refine:bool = False
    ratio_bounds:tuple[float, float] = (3.0, 5.0)

class LandslideSuite(VerificationSuite):

    def limits(self) -> dict[str, Bounds]:
        tol = self.config.tolerance
        stol, dtol = self.config.structure_tolerance, self.config.discretization_tolerance
        ntol = self.config.numeric_tolerance
        return {
            "J_square_err": (None, stol),
            "J_isometry_err": (None, tol),
            "J_explicit_err": (None, tol),
            "beta_eigen_err": (None, tol),
            "associated_err": (None, tol),
            "flow_additivity_err": (None, stol),
            "det_err": (None, tol),
            "self_adjoint_err": (None, tol),
            "codazzi_residual": (None, dtol),
            "curvature_err": (None, dtol),
            "numeric_codazzi_residual": (None, ntol),
            "numeric_det_err": (None, ntol),
            "numeric_self_adjoint_err": (None, tol),
            "codazzi_refinement_ratio": self.config.ratio_bounds
        }

    def evaluate(self, ctx:VerificationContext) -> dict:
        m = ctx.data
        s = m.s
        h, h_star, b, J, forms = surface_data(m, s)
        mask = forms.mask

        I = forms.I.to_real()
        Jv = J.values
        JTIJ = np.swapaxes(Jv, -1, -2) @ I @ Jv
        explicit = explicit_complex_structure(m, s)

        thetas = ctx.thetas if len(ctx.thetas) > 0 else self.config.thetas
        eigen = max(beta_eigen_defect(beta_theta(J, b, t), t) for t in thetas)
        reports = ctx.map(lambda t: associated_check(m, s, t), thetas)
        for r in reports:
            r["max_err"] = max(r["max_err_I"], r["max_err_II"], r["max_err_III"])

        residuals = {
            "J_square_err": float(np.abs(Jv @ Jv + np.eye(2))[mask].max()),
            "J_isometry_err": float(np.abs(JTIJ - I)[mask].max()),
            "J_explicit_err": float(np.abs(explicit.values - Jv)[mask].max()),
            "beta_eigen_err": eigen,
            "associated_err": worst(reports, "max_err"),
            "flow_additivity_err": worst(reports, "flow_additivity_err"),
            "det_err": max(float(np.abs(np.linalg.det(b.values) - 1.0)[mask].max()), worst(reports, "det_err")),
            "self_adjoint_err": max(self_adjoint_defect(b, h), worst(reports, "self_adjoint_err")),
            "codazzi_residual": max(codazzi_residual(b, h), worst(reports, "codazzi_residual")),
            "curvature_err": max(curvature_defect(h), curvature_defect(h_star), worst(reports, "curvature_err")),
            "cases": reports
        }

        if self.config.numeric:
            # forms of the surface built at e^{-s/2}, not the closed forms
            lam = complex(np.exp(-0.5 * s))
            built = numeric_landslide_report(surface_at(m, lam))
            residuals.update({"numeric_%s" % k: v for k, v in built.items() if k != "lambda"})

            if self.config.refine:
                fine = ctx.refined()
                refined = numeric_landslide_report(surface_at(fine, lam))
                coarse_err, fine_err = built["codazzi_residual"], refined["codazzi_residual"]
                residuals["codazzi_refinement_ratio"] = coarse_err / fine_err if fine_err > 0 else float('inf')
                residuals["refined"] = refined
                logger.info("Refinement %ix%i -> %ix%i shrinks the Codazzi residual by %.3f" % (
                    *m.grid.shape, *fine.grid.shape, residuals["codazzi_refinement_ratio"]))
        return residuals
