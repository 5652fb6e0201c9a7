import pytest
from hypothesis import HealthCheck, settings

from cylindric.diagrams import CylindricDiagram
from cylindric.verify import TEST_DIAGRAMS

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(params=TEST_DIAGRAMS, ids=lambda p: f"{p[0][0]}{p[0][1]}-{'.'.join(map(str, p[1]))}")
def diagram(request):
    omega, lam = request.param
    return CylindricDiagram.make(omega, lam)
