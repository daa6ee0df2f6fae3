import numpy as np
from dataclasses import dataclass, field
from functools import cached_property
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Iterable
from hyland.gauss import DomainGrid, MetricData
from hyland.frames import ConnectionForm, build_connection
from hyland.holonomy import QGrid

@dataclass
class VerificationContext(object):
    """Solved data and spectral parameters shared by the suites of one run"""
    data:MetricData
    lambdas:list[complex] = field(default_factory=list)
    thetas:list[float] = field(default_factory=list)
    qs:list[complex] = field(default_factory=list)
    q_grid:None|QGrid = None
    jobs:int = 1
    # solves the same problem on another grid, used for refinement studies
    resolve:None|Callable[[DomainGrid], MetricData] = None

    @cached_property
    def connection(self) -> ConnectionForm:
        return build_connection(self.data)

    @property
    def is_x_independent(self) -> bool:
        return bool(
            (np.ptp(self.data.u, axis=0).max() == 0) and
            (np.ptp(np.abs(self.data.Q), axis=0).max() == 0)
        )

    def refined(self, factor:int =2) -> MetricData:
        if self.resolve is None:
            raise RuntimeError("Context has no solver to refine the data with")
        return self.resolve(self.data.grid.refine(factor))

    def map(self, fn:Callable[[Any], Any], items:Iterable[Any]) -> list[Any]:
        """Apply `fn` to independent jobs on the worker pool, in order"""
        items = list(items)
        if (self.jobs <= 1) or (len(items) <= 1):
            return [fn(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            return list(pool.map(fn, items))
