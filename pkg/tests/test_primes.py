import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import trial_division_is_prime, trial_division_primes
from primedelta import MemoryBudgetError, is_prime, iter_primes, primes_up_to, sieve_primes

# largest prime below 2^64, and a strong-pseudoprime-rich neighborhood
LARGEST_U64_PRIME = 18_446_744_073_709_551_557


def test_sieve_example_limit_10():
    assert primes_up_to(10) == [2, 3, 5, 7]


def test_sieve_example_limit_1_is_empty():
    table = sieve_primes(1)
    assert table.primes() == []
    assert table.prime_count() == 0


def test_sieve_example_limit_50():
    ps = primes_up_to(50)
    assert len(ps) == 15
    assert ps[-1] == 47
    assert ps == trial_division_primes(50)


def test_zero_and_one_are_not_prime():
    table = sieve_primes(10)
    assert not table.is_prime(0)
    assert not table.is_prime(1)


@pytest.mark.parametrize("limit", [0, 1, 2, 3, 7, 8, 9, 100, 4096])
def test_small_limits_match_trial_division(limit):
    assert primes_up_to(limit) == trial_division_primes(limit)


def test_table_matches_trial_division_to_100k():
    assert sieve_primes(100_000).primes() == trial_division_primes(100_000)


@pytest.mark.parametrize("segment_bytes", [1, 3, 64, 4096, 1 << 22])
def test_segmentation_is_invisible(segment_bytes):
    reference = sieve_primes(100_000)
    table = sieve_primes(100_000, segment_bytes=segment_bytes)
    assert table.bits == reference.bits


def test_prime_count_equals_independent_is_prime_scan(table_1m):
    scanned = sum(1 for n in range(1_000_001) if is_prime(n))
    assert table_1m.prime_count() == scanned == 78_498


def test_is_prime_examples():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(561)  # Carmichael number
    assert not trial_division_is_prime(561)


def test_is_prime_beyond_any_table():
    assert is_prime(LARGEST_U64_PRIME)
    assert not is_prime(2**64 - 1)  # 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
    assert is_prime(2**61 - 1)  # Mersenne prime
    assert not is_prime(2**61 + 1)


def test_is_prime_prefers_table(table_10k):
    assert is_prime(9973, table=table_10k)
    assert not is_prime(9999, table=table_10k)


@given(st.integers(min_value=0, max_value=300_000))
def test_is_prime_agrees_with_trial_division(n):
    assert is_prime(n) == trial_division_is_prime(n)


def test_is_prime_rejects_out_of_range():
    with pytest.raises(ValueError):
        is_prime(2**64)
    with pytest.raises(ValueError):
        is_prime(-1)


def test_primes_up_to_examples():
    assert primes_up_to(5) == [2, 3, 5]
    assert primes_up_to(0) == []
    assert len(primes_up_to(100)) == 25


def test_primes_range_query(table_10k):
    assert table_10k.primes(10, 30) == [11, 13, 17, 19, 23, 29]
    assert table_10k.primes(24, 28) == []


def test_table_rejects_queries_beyond_limit(table_10k):
    with pytest.raises(ValueError):
        table_10k.is_prime(10_001)
    with pytest.raises(ValueError):
        table_10k.primes(0, 10_001)
    with pytest.raises(ValueError):
        table_10k.prime_count(10_001)


def test_table_is_immutable(table_10k):
    assert isinstance(table_10k.bits, bytes)
    with pytest.raises(AttributeError):
        table_10k.limit = 5


def test_memory_budget_is_enforced():
    with pytest.raises(MemoryBudgetError):
        sieve_primes(10**9, memory_budget=10**6)


def test_iter_primes_matches_table():
    assert list(iter_primes(10_000)) == primes_up_to(10_000)
    assert list(iter_primes(10_000, segment_bytes=7)) == primes_up_to(10_000)
    assert list(iter_primes(1)) == []


def test_prime_count_prefix(table_10k):
    assert table_10k.prime_count(100) == 25
    assert table_10k.prime_count(0) == 0
    assert table_10k.prime_count(2) == 1


def test_known_prime_counting_values(table_1m):
    # published values of pi(10^k)
    assert table_1m.prime_count(10**4) == 1_229
    assert table_1m.prime_count(10**5) == 9_592
    assert table_1m.prime_count() == 78_498
    assert sieve_primes(10**7).prime_count() == 664_579


def test_concurrent_reads_are_consistent(table_10k):
    from concurrent.futures import ThreadPoolExecutor

    def probe(_):
        return (
            table_10k.prime_count(),
            table_10k.primes(5000, 5100),
            table_10k.is_prime(9973),
        )

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(probe, range(64)))
    assert len(set(map(repr, results))) == 1
