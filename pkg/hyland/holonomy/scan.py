import logging
import numpy as np
from dataclasses import dataclass
from concurrent.futures import ThreadPoolExecutor
from hyland.frames import ConnectionForm, untwist_connection, loop_holonomy

logger = logging.getLogger(__name__)

# fourth order centred first derivative on offsets -2..2
STENCIL = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0

@dataclass(frozen=True)
class QGrid(object):
    """Square grid of spectral values q = center + delta (a + i b), |a|, |b| <= (size - 1)/2"""
    center:complex
    size:int = 5
    delta:float = 1e-3

    def __post_init__(self) -> None:
        if self.size < 5:
            raise ValueError("Holomorphy scan requires at least 5x5 nodes, got %i" % self.size)

    @property
    def values(self) -> np.ndarray:
        k = np.arange(self.size) - 0.5 * (self.size - 1)
        a, b = np.meshgrid(k, k, indexing='ij')
        return self.center + self.delta * (a + 1j * b)

def untwisted_trace(c:ConnectionForm, q:complex, row:None|int =None) -> complex:
    """Trace of the untwisted holonomy, a single valued function of q"""
    H = loop_holonomy(c, q, loop='x', row=row)
    return complex(np.trace(H))

def cauchy_riemann(t:np.ndarray, delta:float) -> np.ndarray:
    """|dt/dqbar| at the nodes with two neighbours on each side, t indexed [re, im]"""
    n, m = t.shape
    ta = sum(w * t[k:n-4+k, 2:m-2] for k, w in enumerate(STENCIL)) / delta
    tb = sum(w * t[2:n-2, k:m-4+k] for k, w in enumerate(STENCIL)) / delta
    return np.abs(0.5 * (ta + 1j * tb))

def holomorphy_scan(c:ConnectionForm, grid:QGrid, row:None|int =None, jobs:int =1) -> dict:
    """Cauchy-Riemann residual of the untwisted holonomy trace over a grid of q.

    The conjugated trace is scanned alongside as an anti-holomorphic
    control.
    """
    qs = grid.values
    if np.any(np.abs(qs) >= 1) or np.any(qs == 0):
        raise ValueError("Scan grid leaves the punctured unit disk")
    # traces of the twisted family are only defined up to sign
    untwisted = c if c.untwisted else untwist_connection(c)

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        traces = list(pool.map(lambda q: untwisted_trace(untwisted, q, row), qs.ravel()))
    t = np.asarray(traces).reshape(qs.shape)

    residual = cauchy_riemann(t, grid.delta)
    # conjugate traces fail the equations, used as control
    control = cauchy_riemann(np.conj(t), grid.delta)
    logger.info("Holomorphy scan around q=%s: CR residual %.3e, control %.3e" % (grid.center, residual.max(), control.max()))
    return {
        "center": grid.center,
        "size": grid.size,
        "delta": grid.delta,
        "cr_residual": float(residual.max()),
        "control_residual": float(control.max()),
        "traces": t
    }
