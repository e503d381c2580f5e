import pytest
from hypothesis import HealthCheck, settings

from binarytor import GF, QQ, ZZ

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F3, F5, F7 = GF(3), GF(5), GF(7)
RINGS = [QQ, F5, ZZ]


@pytest.fixture(params=RINGS, ids=lambda r: r.name)
def ring(request):
    return request.param
