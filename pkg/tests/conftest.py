import random

import pytest
from hypothesis import HealthCheck, settings

from elliptic_lrc.gf import field_of_order

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL_Q = (2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=SMALL_Q, ids=lambda q: f"F{q}")
def field(request):
    return field_of_order(request.param)


@pytest.fixture
def F4():
    return field_of_order(4)
