import os
import logging
# hyland
from hyland.stages.common import prepare, EXIT_SUCCESS
from hyland.gauss import gauss_residual, klotz_residual, save_metric_data
from hyland.utils import write_report
from hyland.errors import DegenerateSolution

logger = logging.getLogger(__name__)

def main(config:str, out:None|str =None, jobs:int =1, tolerance_scale:float =1.0) -> int:
    config, out = prepare(config, out)

    logger.info("Solving structure equations for %s data" % config.data.kind)
    try:
        m = config.data.solve(config.domain.grid())
    except DegenerateSolution as e:
        # nothing to write without the solution
        if e.data is None:
            raise e
        logger.warning("%s, writing flagged data" % e)
        m = e.data
    # flag solutions that degenerate anywhere
    if not m.is_nondegenerate:
        logger.warning("Solution has %i degenerate nodes" % (~m.nondegenerate_mask()).sum())

    # save solution
    path = os.path.join(out, "metric")
    save_metric_data(m, path)
    logger.info("Saved metric data to %s.csv" % path)

    report = m.header() | {
        "name": config.name,
        "gauss_residual": m.grid.sup(gauss_residual(m)),
        "klotz_residual": klotz_residual(m.Q, m.grid),
        "nondegenerate": m.is_nondegenerate,
        "degenerate": not m.is_nondegenerate,
        "degenerate_nodes": int((~m.nondegenerate_mask()).sum()),
        "spectral_radius": m.spectral_radius
    }
    write_report(report, os.path.join(out, "solve.json"))
    return EXIT_SUCCESS
