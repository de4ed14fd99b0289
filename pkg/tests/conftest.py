import pytest
from hypothesis import settings

from nilcomm.partitions import Partition, enumerate_partitions

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")

_PARTS_CACHE: dict[int, tuple] = {}


def partitions_up_to(n_max: int):
    """All partitions of 1..n_max, cached across tests."""
    out = []
    for n in range(1, n_max + 1):
        if n not in _PARTS_CACHE:
            _PARTS_CACHE[n] = tuple(enumerate_partitions(n))
        out.extend(_PARTS_CACHE[n])
    return out


@pytest.fixture(scope="session")
def small_bank():
    # a modest pool of (shape, sampled jordan type) evidence shared by tests
    from nilcomm import verify

    return verify.sample_bank(n_max=8, per=100, seed=0)


@pytest.fixture(scope="session")
def parts10():
    return partitions_up_to(10)


def pytest_make_parametrize_id(config, val, argname):
    if isinstance(val, Partition):
        return str(val)
    return None
