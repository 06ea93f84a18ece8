import pytest
from hypothesis import HealthCheck, settings

from helpers import complete_graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def triangle():
    return complete_graph(3)
