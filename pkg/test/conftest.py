import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from sympy.polys.domains import QQ

from hypergroup_synthesis.core.hypergroup import Recurrence1D, RecurrenceHypergroup, chebyshev
from hypergroup_synthesis.utils.rng import SplitMix64

settings.register_profile(
    "hypergroup",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("hypergroup")

# z P_1 = 1/2 P_2 - 1/4 P_1 + 3/4 P_0 gives c(1, 1, 1) = -1/4
BADREC_SPEC = {
    "kind": "recurrence1d",
    "a": ["1", "1/2"],
    "b": ["0", "-1/4"],
    "c": ["0", "3/4"],
    "tail": {"a": "1/2", "b": "-1/4", "c": "3/4", "from": 1},
}

LAMBDA_2D = (QQ(1, 3), QQ(2, 5))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size sweeps")


@pytest.fixture
def cheb1():
    return chebyshev(1)


@pytest.fixture
def cheb2():
    return chebyshev(2)


@pytest.fixture
def cheb3():
    return chebyshev(3)


@pytest.fixture
def badrec():
    return RecurrenceHypergroup(Recurrence1D.from_spec(BADREC_SPEC))


@pytest.fixture
def rng():
    return SplitMix64(20240101)


@pytest.fixture
def lam():
    return LAMBDA_2D


@pytest.fixture
def write_json(tmp_path):
    def writer(name: str, payload) -> str:
        path = Path(tmp_path) / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return writer


@pytest.fixture
def spec_dir(write_json):
    return {
        "cheb1": write_json("cheb1.json", {"kind": "chebyshev", "dim": 1}),
        "cheb2": write_json("cheb2.json", {"kind": "chebyshev", "dim": 2}),
        "badrec": write_json("badrec.json", BADREC_SPEC),
    }
