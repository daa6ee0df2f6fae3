import json
import pytest
import numpy as np
from hyland.stages.configs import ComplexNumber, RunConfig, DataConfig, load_config
from hyland.suites import FlatnessSuiteConfig, CongruenceSuiteConfig
from hyland.errors import ConfigError

def test_complex_number():
    assert ComplexNumber.validate([1.0, -2.0]) == 1 - 2j
    assert ComplexNumber.validate(0.5) == 0.5 + 0j
    with pytest.raises(TypeError):
        ComplexNumber.validate("1+2j")
    with pytest.raises(TypeError):
        ComplexNumber.validate(True)

def test_load_config(write_config):
    config = load_config(write_config(
        spectral={"qs": [[0.0, 0.5]], "thetas": [0.1]},
        suites=[{"suite_type": "flatness", "samples": 4}, {"suite_type": "congruence"}]
    ))
    assert config.name == "test"
    assert config.spectral.qs == [0.5j]
    assert isinstance(config.suites[0], FlatnessSuiteConfig)
    assert config.suites[0].samples == 4
    assert isinstance(config.suites[1], CongruenceSuiteConfig)

def test_curvature_parameter():
    data = DataConfig(K=-1 / np.cosh(1.0) ** 2, u0=0.5)
    assert np.isclose(data.s, 2.0)
    assert data.K is None
    with pytest.raises(ValueError):
        DataConfig(s=2.0, K=-0.5, u0=0.5)
    with pytest.raises(ValueError):
        DataConfig(u0=0.5)
    with pytest.raises(ValueError):
        DataConfig(s=2.0)
    with pytest.raises(ValueError):
        DataConfig(kind='patch', s=2.0)

@pytest.mark.parametrize("overrides", [
    {"unknown": 1},
    {"domain": {"kind": "cylinder", "nx": 4}},
    {"domain": {"kind": "patch", "nx": 16, "ny": 16}},
    {"spectral": {"lambdas": [[1.0, 0.0]]}},
    {"spectral": {"qs": [1.5]}},
    {"spectral": {"q_grid": {"center": 0.999}}},
    {"suites": [{"suite_type": "flatness", "sample": 4}]},
    {"suites": [{"suite_type": "nonexistent"}]},
    {"suites": [{"suite_type": "holomorphy"}]},
])
def test_invalid_configs(write_config, overrides):
    with pytest.raises(ConfigError):
        load_config(write_config(**overrides))

def test_missing_config(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "missing.json"))

def test_malformed_config(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    with pytest.raises(ConfigError):
        load_config(str(path))

def test_context(write_config):
    config = load_config(write_config(spectral={"thetas": [0.5], "qs": [0.1]}))
    m = config.data.solve(config.domain.grid())
    assert m.grid.shape == (16, 16)
    ctx = config.context(m, jobs=2)
    assert ctx.lambdas == [m.spectral_radius]
    assert ctx.thetas == [0.5] and ctx.qs == [0.1]
    assert ctx.refined().grid.shape == (32, 31)

def test_perturbation(write_config):
    config = load_config(write_config(data={"kind": "profile", "s": 2.0, "u0": 0.5, "perturbation": {"amplitude": 0.1}}))
    m = config.data.solve(config.domain.grid())
    assert np.ptp(m.u, axis=0).max() > 0.1
