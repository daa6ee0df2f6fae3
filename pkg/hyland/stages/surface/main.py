import os
import logging
# hyland
from hyland.stages.common import prepare, EXIT_SUCCESS
from hyland.frames import build_connection, integrate_frame, save_frame
from hyland.surface import spectral_immersion, form_report, export_obj
from hyland.utils import write_report

logger = logging.getLogger(__name__)

def main(config:str, out:None|str =None, jobs:int =1, tolerance_scale:float =1.0) -> int:
    config, out = prepare(config, out)
    # solve data and build the connection family once for all spectral values
    m = config.data.solve(config.domain.grid())
    c = build_connection(m)
    ctx = config.context(m, jobs=jobs)

    def build(item:tuple[int, complex]) -> dict:
        k, lam = item
        logger.info("Building surface at lambda=%s" % lam)
        F = integrate_frame(c, lam)
        mesh = spectral_immersion(F, m.grid)
        # points and normals must lie on the hyperboloid and its tangent space
        mesh.check()
        obj = os.path.join(out, "surface", "lambda_%02i.obj" % k)
        frame = os.path.join(out, "surface", "frame_%02i.csv" % k)
        # write mesh and frame
        export_obj(mesh, obj)
        save_frame(F, frame)
        return form_report(mesh, m) | {"obj": obj, "frame": frame}

    reports = ctx.map(build, enumerate(ctx.lambdas))
    write_report({"name": config.name, "surfaces": reports}, os.path.join(out, "surface.json"))
    return EXIT_SUCCESS
