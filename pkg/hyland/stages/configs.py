import os
import logging
import pydantic
import dataclasses
import numpy as np
from typing import Literal, get_args
from typing_extensions import Annotated
# hyland
from hyland.errors import ConfigError
from hyland.gauss import DomainGrid, MetricData, s_of_curvature, solve_profile_ode, solve_patch
from hyland.holonomy import QGrid
from hyland.suites import AnySuiteConfig, VerificationContext

logger = logging.getLogger(__name__)

class ComplexNumber(complex):
    """Complex number given as [re, im] or as a plain real"""

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def validate(cls, v):
        if isinstance(v, (int, float, complex)) and not isinstance(v, bool):
            return complex(v)
        if isinstance(v, (list, tuple)) and (len(v) == 2):
            return complex(float(v[0]), float(v[1]))
        raise TypeError("Expected a number or an [re, im] pair, got %r" % (v,))

class StrictModel(pydantic.BaseModel):

    class Config:
        extra = 'forbid'

class DomainConfig(StrictModel):
    """Domain Configuration Model"""
    kind:Literal['cylinder', 'patch'] = 'cylinder'
    nx:int = 128
    ny:int = 128
    Lx:float = 1.0
    Ly:float = 1.0
    fd_order:None|int = None

    @pydantic.validator('nx', 'ny')
    def _check_nodes(cls, v):
        if v < 8:
            raise ValueError("Grid requires at least 8 nodes per direction, got %i" % v)
        return v

    @pydantic.validator('Lx', 'Ly')
    def _check_lengths(cls, v):
        if v <= 0:
            raise ValueError("Grid lengths must be positive, got %s" % v)
        return v

    def grid(self) -> DomainGrid:
        return DomainGrid(self.kind, self.nx, self.ny, self.Lx, self.Ly, fd_order=self.fd_order)

class PerturbationConfig(StrictModel):
    """Control perturbation amplitude sin(2 pi mode x / Lx) added to u after solving"""
    amplitude:float = 1e-2
    mode:int = 1

class DataConfig(StrictModel):
    """Data Configuration Model"""
    kind:Literal['profile', 'patch'] = 'profile'
    # curvature parameter, either s or K = -1/cosh^2(s/2)
    s:None|float = None
    K:None|float = None
    # holomorphic quadratic differential
    Q0:ComplexNumber = 1.0
    Qpoly:list[ComplexNumber] = []
    # initial value of the profile or dirichlet value on the patch
    u0:None|float = None
    boundary:float = 0.0
    perturbation:None|PerturbationConfig = None

    @pydantic.root_validator(pre=False, skip_on_failure=True)
    def _check_curvature(cls, v):
        if (v.get('s') is None) == (v.get('K') is None):
            raise ValueError("Exactly one of `s` and `K` must be given")
        if v.get('K') is not None:
            if not (-1 < v['K'] < 0):
                raise ValueError("Curvature K must lie in (-1, 0), got %s" % v['K'])
            v['s'], v['K'] = s_of_curvature(v['K']), None
        if v['s'] <= 0:
            raise ValueError("Parameter s must be positive, got %s" % v['s'])
        if (v['kind'] == 'profile') and (v.get('u0') is None):
            raise ValueError("Profile data requires the initial value `u0`")
        if (v['kind'] == 'patch') and (len(v['Qpoly']) == 0):
            raise ValueError("Patch data requires the polynomial coefficients `Qpoly`")
        return v

    def solve(self, grid:DomainGrid) -> MetricData:
        """Solve the structure equations on the given grid"""
        if self.kind == 'profile':
            m = solve_profile_ode(self.s, self.Q0, self.u0, grid.Ly, grid.ny, nx=grid.nx, Lx=grid.Lx)
        else:
            m = solve_patch(self.Qpoly, self.s, grid, self.boundary)

        if self.perturbation is not None:
            p = self.perturbation
            x = (m.grid.x - m.grid.x0)[:, None]
            logger.warning("Injecting perturbation of amplitude %.3e into u" % p.amplitude)
            m = m.with_u(m.u + p.amplitude * np.sin(2.0 * np.pi * p.mode * x / m.grid.Lx))
        return m

class QGridConfig(StrictModel):
    center:ComplexNumber
    size:int = 5
    delta:float = 1e-3

    @pydantic.root_validator(pre=False, skip_on_failure=True)
    def _check_grid(cls, v):
        if v['size'] < 5:
            raise ValueError("Holomorphy scan requires at least 5x5 nodes, got %i" % v['size'])
        if v['delta'] <= 0:
            raise ValueError("Grid spacing must be positive, got %s" % v['delta'])
        qs = QGrid(v['center'], v['size'], v['delta']).values
        if (np.abs(qs).max() >= 1) or np.any(qs == 0):
            raise ValueError("Scan grid around %s leaves the punctured unit disk" % v['center'])
        return v

    def grid(self) -> QGrid:
        return QGrid(complex(self.center), self.size, self.delta)

class SpectralConfig(StrictModel):
    """Spectral Configuration Model"""
    lambdas:list[ComplexNumber] = []
    thetas:list[float] = []
    qs:list[ComplexNumber] = []
    q_grid:None|QGridConfig = None

    @pydantic.validator('lambdas', each_item=True)
    def _check_lambda(cls, v):
        if not (0 < abs(v) < 1):
            raise ValueError("Spectral value must lie in the punctured open unit disk, got %s" % v)
        return v

    @pydantic.validator('qs', each_item=True)
    def _check_q(cls, v):
        if not (0 < abs(v) <= 1):
            raise ValueError("Parameter q must lie in the closed punctured unit disk, got %s" % v)
        return v

class OutputConfig(StrictModel):
    out_dir:str = "output"

# suite configs by their `suite_type`
SUITE_CONFIGS = {t.suite_type: t for t in get_args(AnySuiteConfig)}

class RunConfig(StrictModel):
    """Run Configuration Model"""
    name:str = "hyland"
    domain:DomainConfig = DomainConfig()
    data:DataConfig
    spectral:SpectralConfig = SpectralConfig()
    suites:list[
        Annotated[
            AnySuiteConfig,
            pydantic.Field(..., discriminator='suite_type')
        ]
    ] = []
    output:OutputConfig = OutputConfig()

    @pydantic.validator('suites', pre=True)
    def _reject_unknown_suite_keys(cls, v):
        for item in v:
            if not isinstance(item, dict) or item.get('suite_type') not in SUITE_CONFIGS:
                continue
            known = {f.name for f in dataclasses.fields(SUITE_CONFIGS[item['suite_type']])}
            unknown = set(item) - known
            if len(unknown) > 0:
                raise ValueError("Unknown keys %s in `%s` suite" % (sorted(unknown), item['suite_type']))
        return v

    @pydantic.root_validator(pre=False, skip_on_failure=True)
    def _check_consistency(cls, v):
        if (v['data'].kind == 'profile') and (v['domain'].kind != 'cylinder'):
            raise ValueError("Profile data requires a cylinder domain")
        if (v['data'].kind == 'patch') and (v['domain'].kind != 'patch'):
            raise ValueError("Patch data requires a patch domain")
        if any(s.suite_type == 'holomorphy' for s in v['suites']) and (v['spectral'].q_grid is None):
            raise ValueError("Holomorphy suite requires `spectral.q_grid`")
        return v

    def spectral_values(self, m:MetricData) -> list[complex]:
        """Configured spectral values, by default the one reproducing the data"""
        if len(self.spectral.lambdas) > 0:
            return [complex(lam) for lam in self.spectral.lambdas]
        return [complex(m.spectral_radius)]

    def context(self, m:MetricData, jobs:int =1) -> VerificationContext:
        return VerificationContext(
            data=m,
            lambdas=self.spectral_values(m),
            thetas=list(self.spectral.thetas),
            qs=[complex(q) for q in self.spectral.qs],
            q_grid=None if self.spectral.q_grid is None else self.spectral.q_grid.grid(),
            jobs=jobs,
            resolve=self.data.solve
        )

def load_config(path:str) -> RunConfig:
    # check if config exists
    if not os.path.isfile(path):
        raise ConfigError("Configuration file not found: %s" % path)
    logger.info("Loading run configuration from %s" % path)
    try:
        return RunConfig.parse_file(path)
    except (pydantic.ValidationError, ValueError, TypeError) as e:
        raise ConfigError("Invalid configuration %s:\n%s" % (path, e)) from e
