import json
import pytest

@pytest.fixture
def write_config(tmp_path):
    """Writes a small run configuration and returns its path"""

    def write(**overrides) -> str:
        config = {
            "name": "test",
            "domain": {"kind": "cylinder", "nx": 16, "ny": 16},
            "data": {"kind": "profile", "s": 2.0, "Q0": 1.0, "u0": 0.5},
            "spectral": {"lambdas": [0.36787944117144233]},
            "output": {"out_dir": str(tmp_path / "out")}
        }
        config.update(overrides)
        path = tmp_path / "config.json"
        path.write_text(json.dumps(config))
        return str(path)

    return write
