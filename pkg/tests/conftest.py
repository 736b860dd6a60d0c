import pytest
from hypothesis import HealthCheck, settings

from primedelta import sieve_primes

settings.register_profile(
    "primedelta",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("primedelta")


@pytest.fixture(scope="session")
def table_10k():
    return sieve_primes(10_000)


@pytest.fixture(scope="session")
def table_1m():
    return sieve_primes(1_000_000)
