import json

import pytest
from hypothesis import HealthCheck, settings

# fixed seed: property runs are reproducible
settings.register_profile(
    "dplct",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    print_blob=True,
)
settings.load_profile("dplct")


@pytest.fixture
def write_json(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return _write
