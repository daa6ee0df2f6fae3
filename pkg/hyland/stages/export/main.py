import os
import logging
import numpy as np
# hyland
from hyland.stages.common import prepare, EXIT_SUCCESS
from hyland.gauss import save_metric_data
from hyland.frames import build_connection, integrate_frame, save_frame
from hyland.surface import spectral_immersion, export_obj, congruence_check
from hyland.landslide import PHASE_SIGN
from hyland.utils import write_report

logger = logging.getLogger(__name__)

# spectral values this close to opposite are paired
PAIR_ATOL = 1e-12

def sweep_values(lambdas:list[complex], thetas:list[float]) -> list[tuple[complex, float, complex]]:
    """(lambda_0, theta, lambda) with lambda the spectral value of the landslide of lambda_0 by theta.

    A landslide by theta + 2 pi lands on -lambda. When the sweep holds no
    such partner for a lambda_0, the value at the first theta + 2 pi is
    appended so the opposite surfaces can be checked for congruence.
    """
    thetas = thetas if len(thetas) > 0 else [0.0]
    values = []
    for lam0 in lambdas:
        row = [(lam0, theta, complex(lam0 * np.exp(0.5j * PHASE_SIGN * theta))) for theta in thetas]
        if not any(abs(a[2] + b[2]) < PAIR_ATOL for a in row for b in row):
            theta = thetas[0] + 2.0 * np.pi
            row.append((lam0, theta, complex(lam0 * np.exp(0.5j * PHASE_SIGN * theta))))
        values.extend(row)
    return values

def opposite_pairs(values:list[tuple[complex, float, complex]]) -> list[tuple[int, int]]:
    """Indices of sweep entries with opposite spectral values"""
    return [
        (a, b)
        for a in range(len(values))
        for b in range(a + 1, len(values))
        if abs(values[a][2] + values[b][2]) < PAIR_ATOL
    ]

def main(config:str, out:None|str =None, jobs:int =1, tolerance_scale:float =1.0) -> int:
    config, out = prepare(config, out)
    m = config.data.solve(config.domain.grid())
    c = build_connection(m)
    ctx = config.context(m, jobs=jobs)

    # save data the meshes are built from
    save_metric_data(m, os.path.join(out, "metric"))
    # spectral values of all landslides
    values = sweep_values(ctx.lambdas, ctx.thetas)

    def export(item:tuple[int, tuple[complex, float, complex]]) -> dict:
        k, (lam0, theta, lam) = item
        F = integrate_frame(c, lam)
        mesh = spectral_immersion(F, m.grid)
        obj = os.path.join(out, "meshes", "mesh_%03i.obj" % k)
        frame = os.path.join(out, "frames", "frame_%03i.csv" % k)
        # write frame, the mesh is written below
        save_frame(F, frame)
        return {
            "lambda_0": lam0, "theta": theta, "lambda": lam,
            "obj": obj, "frame": frame, "vertices": export_obj(mesh, obj),
            "mesh": mesh
        }

    entries = ctx.map(export, enumerate(values))

    # meshes at opposite spectral values are congruent
    pairs = []
    for a, b in opposite_pairs(values):
        _, residual = congruence_check(entries[a]["mesh"], entries[b]["mesh"])
        pairs.append({"meshes": [a, b], "congruence_residual": residual})
    if len(pairs) == 0:
        logger.warning("Sweep holds no opposite spectral values, congruence is not checked")
    # meshes are not part of the report
    for e in entries:
        e.pop("mesh")

    logger.info("Exported %i meshes to %s" % (len(entries), out))
    write_report({
        "name": config.name,
        "metric": os.path.join(out, "metric.csv"),
        "meshes": entries,
        "congruent_pairs": pairs
    }, os.path.join(out, "export.json"))
    return EXIT_SUCCESS
