import logging
from .base import VerificationSuite, SuiteConfig, SuiteResult
from .context import VerificationContext
from .auto import AutoSuite
from hyland.utils.typedlist import typedlist

logger = logging.getLogger(__name__)

class SuiteCollection(typedlist[VerificationSuite]):
    """Ordered suites of a verification run, built from configs on insertion"""

    def handle_type_conflict(self, config:SuiteConfig) -> VerificationSuite:
        return AutoSuite.from_config(config)

    def run(self, ctx:VerificationContext, tolerance_scale:float =1.0) -> list[SuiteResult]:
        # suites run in order, each one may fan out on the worker pool
        results = []
        for suite in self:
            logger.info("Running suite `%s`" % suite.name)
            results.append(suite(ctx, tolerance_scale=tolerance_scale))
        return results
