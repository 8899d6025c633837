import random

import pytest
from hypothesis import HealthCheck, settings

from dp1.exactnum import field_make

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELDS = ["q:2", "q:7", "q:101", "gf:2:x^5+x^2+1", "gf:3:x^3+2x+1", "gf:7:x^2+6x+3", "QQ"]
FINITE = [f for f in FIELDS if f != "QQ"]


@pytest.fixture(params=FIELDS)
def any_field(request):
    return field_make(request.param)


def rng_for(seed: int) -> random.Random:
    return random.Random(seed)
