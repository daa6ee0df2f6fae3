import os
import logging
# hyland
from hyland.stages.common import prepare, EXIT_SUCCESS
from hyland.frames import build_connection, integrate_frame
from hyland.surface import spectral_immersion, form_report, congruence_check
from hyland.utils import write_report

logger = logging.getLogger(__name__)

def main(config:str, out:None|str =None, jobs:int =1, tolerance_scale:float =1.0) -> int:
    config, out = prepare(config, out)
    m = config.data.solve(config.domain.grid())
    c = build_connection(m)
    ctx = config.context(m, jobs=jobs)

    def sweep(lam:complex) -> dict:
        mesh = spectral_immersion(integrate_frame(c, lam), m.grid)
        # surface at the opposite spectral value
        flipped = spectral_immersion(integrate_frame(c, -lam), m.grid)
        _, residual = congruence_check(mesh, flipped)
        logger.info("lambda=%s: congruence residual against -lambda %.3e" % (lam, residual))
        return form_report(mesh, m) | {"congruence_residual": residual}

    reports = ctx.map(sweep, ctx.lambdas)
    write_report({"name": config.name, "lambdas": ctx.lambdas, "reports": reports}, os.path.join(out, "sweep.json"))
    return EXIT_SUCCESS
