import numpy as np
from dataclasses import dataclass
from typing import Literal
from .base import SuiteConfig, VerificationSuite, Bounds, worst
from .context import VerificationContext
from hyland.frames import untwist_connection, gauge_matrix, loop_holonomy
from hyland.holonomy import principal_sqrt

@dataclass
class GaugeSuiteConfig(SuiteConfig):
    suite_type:Literal['gauge'] = 'gauge'
    tolerance:float = 1e-10

class GaugeSuite(VerificationSuite):
    """Untwisted connection and holonomy against the gauge D^{1/mu} (.) D^mu of the twisted ones"""

    def limits(self) -> dict[str, Bounds]:
        return {
            "connection_gauge_err": (None, self.config.tolerance),
            "holonomy_gauge_err": (None, self.config.tolerance)
        }

    def evaluate(self, ctx:VerificationContext) -> dict:
        c = ctx.connection
        untwisted = untwist_connection(c)
        row = ctx.data.grid.nearest_row(0.0)

        def run(q:complex) -> dict:
            mu = principal_sqrt(q)
            d = gauge_matrix(mu)
            d_inv = np.linalg.inv(d)
            direct = [d_inv @ a @ d for a in c.evaluate(mu)]
            connection_err = max(float(np.abs(a - b).max()) for a, b in zip(untwisted.evaluate(q), direct))
            report = {"q": q, "connection_gauge_err": connection_err}
            if ctx.data.grid.is_periodic:
                H = d_inv @ loop_holonomy(c, mu, row=row) @ d
                H_hat = loop_holonomy(untwisted, q, row=row)
                report["holonomy_gauge_err"] = float(min(np.abs(H_hat - H).max(), np.abs(H_hat + H).max()))
            return report

        reports = ctx.map(run, ctx.qs)
        residuals = {
            key: worst(reports, key)
            for key in ("connection_gauge_err", "holonomy_gauge_err")
            if any(key in r for r in reports)
        }
        residuals["cases"] = reports
        return residuals
