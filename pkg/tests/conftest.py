import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from monodef.presets import STANDARD, standard_model  # noqa: E402

_MODELS = {}


def model(name):
    """Standard models are built once per session; cohomology caches live on them."""
    if name not in _MODELS:
        _MODELS[name] = standard_model(name)
    return _MODELS[name]


@pytest.fixture
def rng():
    return random.Random(1729)


@pytest.fixture(params=sorted(STANDARD))
def any_model(request):
    return model(request.param)


@pytest.fixture
def dual():
    return model("dual_numbers")


@pytest.fixture
def dual2():
    return model("dual_numbers_2")


@pytest.fixture
def m2():
    return model("matrix_2")


@pytest.fixture
def z2():
    return model("group_z2")


@pytest.fixture
def klein():
    return model("group_klein")
