import numpy as np
from dataclasses import dataclass
from typing import Literal
from .base import SuiteConfig, VerificationSuite, Bounds
from .context import VerificationContext
from hyland.gauss import gauss_residual, klotz_residual
from hyland.frames import flatness_residual

@dataclass
class FlatnessSuiteConfig(SuiteConfig):
    """Structure equations against flatness of the connection family.

    Attributes:
        samples (int): spectral values sampled on the unit circle and,
            as many again, on the circle of radius `inner_radius`
        gauss_tolerance (float): bound of the structure equation residual
        reality_tolerance (float): bound of the reality defect on the unit circle
    """
    suite_type:Literal['flatness'] = 'flatness'
    tolerance:float = 1e-8
    samples:int = 8
    inner_radius:float = 0.5
    gauss_tolerance:float = 1e-8
    reality_tolerance:float = 1e-10

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError("Flatness suite requires at least one sample, got %i" % self.samples)
        if not (0 < self.inner_radius < 1):
            raise ValueError("Inner radius must lie in (0, 1), got %s" % self.inner_radius)

class FlatnessSuite(VerificationSuite):

    def spectral_samples(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.config.samples
        phases = 2.0 * np.pi * np.arange(n) / n
        # offset so the inner samples avoid the real axis
        return np.exp(1j * phases), self.config.inner_radius * np.exp(1j * (phases + np.pi / n))

    def limits(self) -> dict[str, Bounds]:
        return {
            "flatness_residual": (None, self.config.tolerance),
            "gauss_residual": (None, self.config.gauss_tolerance),
            "klotz_residual": (None, self.config.gauss_tolerance),
            "reality_defect": (None, self.config.reality_tolerance)
        }

    def evaluate(self, ctx:VerificationContext) -> dict:
        c, m = ctx.connection, ctx.data
        circle, disk = self.spectral_samples()
        flatness = ctx.map(lambda lam: flatness_residual(c, lam), np.concatenate([circle, disk]))
        return {
            "flatness_residual": float(np.max(flatness)),
            "gauss_residual": m.grid.sup(gauss_residual(m)),
            "klotz_residual": klotz_residual(m.Q, m.grid),
            "reality_defect": max(c.reality_defect(lam) for lam in circle),
            "twisted": c.is_twisted(),
            "samples": int(len(flatness))
        }
