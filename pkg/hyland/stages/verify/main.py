import os
import logging
# hyland
from hyland.stages.common import prepare, EXIT_SUCCESS, EXIT_TOLERANCE, EXIT_NUMERICAL
from hyland.suites import (
    SuiteCollection,
    SuiteResult,
    FlatnessSuiteConfig,
    FormsSuiteConfig,
    LandslideSuiteConfig
)
from hyland.utils import write_report

logger = logging.getLogger(__name__)

# suites run when the configuration names none
DEFAULT_SUITES = [FlatnessSuiteConfig(), FormsSuiteConfig(), LandslideSuiteConfig()]

def exit_status(results:list[SuiteResult]) -> int:
    if any(r.error is not None for r in results):
        return EXIT_NUMERICAL
    if any(not r.passed for r in results):
        return EXIT_TOLERANCE
    return EXIT_SUCCESS

def main(config:str, out:None|str =None, jobs:int =1, tolerance_scale:float =1.0) -> int:
    config, out = prepare(config, out)
    # solve structure equations and share the solution between suites
    m = config.data.solve(config.domain.grid())
    ctx = config.context(m, jobs=jobs)

    # build suites, fall back to the default suites if none are configured
    suites = SuiteCollection()
    suites.extend(config.suites if len(config.suites) > 0 else DEFAULT_SUITES)
    results = suites.run(ctx, tolerance_scale=tolerance_scale)

    # errors take precedence over tolerance failures
    status = exit_status(results)
    write_report({
        "name": config.name,
        "tolerance_scale": tolerance_scale,
        "passed": status == EXIT_SUCCESS,
        "suites": [r.report() for r in results]
    }, os.path.join(out, "verify.json"))
    logger.info("Verification %s" % ("passed" if status == EXIT_SUCCESS else "failed"))
    return status
