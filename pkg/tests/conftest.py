import functools

import pytest
from hypothesis import HealthCheck, settings

from moritakit.fixtures import load

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def fixture_algebra(name):
    return load(name)


@pytest.fixture
def ex14():
    return fixture_algebra("ex14")


@pytest.fixture
def ex15():
    return fixture_algebra("ex15")


@pytest.fixture
def dual_numbers():
    return fixture_algebra("selfinj-x2")
