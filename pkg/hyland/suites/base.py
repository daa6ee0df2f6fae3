import logging
import numpy as np
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Literal
from .context import VerificationContext
from hyland.errors import NumericalError

logger = logging.getLogger(__name__)

# (lower, upper) bounds of a residual, None for an open side
Bounds = tuple[None|float, None|float]

@dataclass
class SuiteConfig(object):
    suite_type:Literal['abstract-suite'] = 'abstract-suite'
    tolerance:float = 1e-6

@dataclass
class SuiteResult(object):
    suite:str
    residuals:dict[str, Any] = field(default_factory=dict)
    limits:dict[str, Bounds] = field(default_factory=dict)
    failures:list[str] = field(default_factory=list)
    error:None|str = None

    @property
    def passed(self) -> bool:
        return (self.error is None) and (len(self.failures) == 0)

    def report(self) -> dict[str, Any]:
        report = {
            "suite": self.suite,
            "passed": self.passed,
            "residuals": self.residuals,
            "limits": {k: list(v) for k, v in self.limits.items()},
            "failures": self.failures
        }
        if self.error is not None:
            report["error"] = self.error
        return report

class VerificationSuite(ABC):
    """Abstract Verification Suite"""

    def __init__(self, config:SuiteConfig) -> None:
        self._config = config

    @property
    def config(self) -> SuiteConfig:
        return self._config

    @property
    def name(self) -> str:
        return self.config.suite_type

    @abstractmethod
    def limits(self) -> dict[str, Bounds]:
        """Bounds of the residuals returned by `evaluate`. Upper bounds are tolerances and get scaled."""
        ...

    @abstractmethod
    def evaluate(self, ctx:VerificationContext) -> dict[str, Any]:
        ...

    def check(self, residuals:dict[str, Any], tolerance_scale:float =1.0) -> tuple[dict[str, Bounds], list[str]]:
        limits, failures = {}, []
        for key, (lower, upper) in self.limits().items():
            if key not in residuals:
                continue
            upper = None if upper is None else upper * tolerance_scale
            limits[key] = (lower, upper)
            val = float(residuals[key])
            # nan fails every bound
            if ((upper is not None) and not (val <= upper)) or ((lower is not None) and not (val >= lower)):
                failures.append(key)
        return limits, failures

    def __call__(self, ctx:VerificationContext, tolerance_scale:float =1.0) -> SuiteResult:
        try:
            residuals = self.evaluate(ctx)
        except NumericalError as e:
            logger.error("Suite `%s` failed with %s: %s" % (self.name, type(e).__name__, e))
            return SuiteResult(suite=self.name, error="%s: %s" % (type(e).__name__, e))

        limits, failures = self.check(residuals, tolerance_scale)
        for key in failures:
            logger.warning("Suite `%s`: %s = %.3e outside %s" % (self.name, key, residuals[key], limits[key]))
        logger.info("Suite `%s` %s" % (self.name, "passed" if len(failures) == 0 else "failed"))
        return SuiteResult(suite=self.name, residuals=residuals, limits=limits, failures=failures)

def worst(reports:list[dict[str, Any]], key:str) -> float:
    """Largest value of `key` over per-case reports, nan propagates"""
    values = [r[key] for r in reports if key in r]
    return float(np.max(values)) if len(values) > 0 else 0.0
