import os
import logging
# hyland
from hyland.stages.common import prepare, EXIT_SUCCESS
from hyland.frames import build_connection
from hyland.holonomy import complex_landslide, holomorphy_scan
from hyland.utils import write_report

logger = logging.getLogger(__name__)

def main(config:str, out:None|str =None, jobs:int =1, tolerance_scale:float =1.0) -> int:
    config, out = prepare(config, out)
    # solve source surface data
    m = config.data.solve(config.domain.grid())
    ctx = config.context(m, jobs=jobs)

    def run(item:tuple[int, complex]) -> dict:
        k, q = item
        logger.info("Complex landslide at q=%s" % q)
        return complex_landslide(m, q).report()

    reports = ctx.map(run, enumerate(ctx.qs))
    # reports are written by a single writer after all jobs are done
    paths = [
        write_report(r, os.path.join(out, "holonomy", "q_%02i.json" % k))
        for k, r in enumerate(reports)
    ]

    # manifest pointing to the per q reports
    manifest = {"name": config.name, "qs": ctx.qs, "reports": paths}
    # scan holomorphy of the trace around the grid center
    if ctx.q_grid is not None:
        scan = holomorphy_scan(build_connection(m), ctx.q_grid, jobs=jobs)
        manifest["scan"] = write_report(scan, os.path.join(out, "holonomy", "scan.json"))
    write_report(manifest, os.path.join(out, "holonomy.json"))
    return EXIT_SUCCESS
