"""Prime generation and primality queries.

A PrimeTable is a packed bit array over 0..limit built by a segmented
sieve of Eratosthenes; beyond any table, is_prime answers with a
deterministic Miller-Rabin test whose base sets are published as complete
for the full 64-bit range. No probabilistic answers anywhere.
"""

from array import array
from math import isqrt

from . import kernels
from .errors import MemoryBudgetError

U64_MAX = 2**64 - 1

# bytes of bit array per sieve segment; L1-cache sized. Tunable: results are
# byte-identical for any value >= 1.
DEFAULT_SEGMENT_BYTES = 32_768

# cap on a table's bit-array size (2 GiB covers limits up to ~1.7e10)
DEFAULT_MEMORY_BUDGET = 2**31


def _validate_u64(n, what="value"):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{what} must be an int, not {type(n).__name__}")
    if n < 0 or n > U64_MAX:
        raise ValueError(f"{what} must fit in 64 unsigned bits, got {n}")
    return n


def _small_primes(n):
    """Primes <= n by a plain in-memory sieve; used for base primes only."""
    if n < 2:
        return array("Q")
    flags = bytearray(b"\x01") * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
    return array("Q", (i for i in range(n + 1) if flags[i]))


class PrimeTable:
    """Immutable primality table for 0..limit, safe for concurrent reads.

    bit n of the packed array is 1 iff n is prime. Construct via
    sieve_primes(); the constructor is internal.
    """

    __slots__ = ("_limit", "_bits")

    def __init__(self, limit, bits):
        self._limit = limit
        self._bits = bytes(bits)

    @property
    def limit(self):
        return self._limit

    @property
    def bits(self):
        """The packed bit array (bytes, LSB first); bits beyond limit are 0."""
        return self._bits

    def is_prime(self, n):
        _validate_u64(n, "n")
        if n > self._limit:
            raise ValueError(f"{n} is beyond the table limit {self._limit}")
        return (self._bits[n >> 3] >> (n & 7)) & 1 == 1

    __contains__ = is_prime

    def primes(self, lo=0, hi=None):
        """Primes p with lo <= p <= hi (hi defaults to the table limit)."""
        if hi is None:
            hi = self._limit
        _validate_u64(lo, "lo")
        _validate_u64(hi, "hi")
        if hi > self._limit:
            raise ValueError(f"hi={hi} is beyond the table limit {self._limit}")
        return kernels.extract_primes(self._bits, lo, hi)

    def prime_count(self, hi=None):
        """Number of primes <= hi (hi defaults to the table limit)."""
        if hi is None:
            hi = self._limit
        _validate_u64(hi, "hi")
        if hi > self._limit:
            raise ValueError(f"hi={hi} is beyond the table limit {self._limit}")
        full, rem = divmod(hi + 1, 8)
        count = int.from_bytes(self._bits[:full], "little").bit_count()
        if rem:
            count += (self._bits[full] & ((1 << rem) - 1)).bit_count()
        return count

    def __repr__(self):
        return f"PrimeTable(limit={self._limit}, primes={self.prime_count()})"


def sieve_primes(limit, *, segment_bytes=DEFAULT_SEGMENT_BYTES,
                 memory_budget=DEFAULT_MEMORY_BUDGET):
    """Sieve all primes up to limit (inclusive) into a PrimeTable.

    Runs segment by segment so the working set stays cache sized; the
    resulting bit array is identical for every segment_bytes value.
    Raises MemoryBudgetError when the bit array itself would exceed
    memory_budget bytes.
    """
    _validate_u64(limit, "limit")
    if segment_bytes < 1:
        raise ValueError("segment_bytes must be >= 1")
    nbytes = (limit >> 3) + 1
    if nbytes > memory_budget:
        raise MemoryBudgetError(
            f"sieve to {limit} needs {nbytes} bytes, over the budget of "
            f"{memory_budget} (raise memory_budget to allow)"
        )
    padded_end = nbytes << 3
    base = _small_primes(isqrt(padded_end - 1))
    master = bytearray(nbytes)
    span = segment_bytes << 3
    for low in range(0, padded_end, span):
        high = min(low + span, padded_end)
        master[low >> 3 : high >> 3] = kernels.sieve_segment(low, high, base)
    master[-1] &= (1 << ((limit & 7) + 1)) - 1  # drop bits beyond limit
    return PrimeTable(limit, master)


def primes_up_to(limit, **sieve_kwargs):
    """Ordered list of all primes <= limit."""
    return sieve_primes(limit, **sieve_kwargs).primes()


def iter_primes(limit, *, segment_bytes=DEFAULT_SEGMENT_BYTES):
    """Yield primes <= limit in order without materializing a full table."""
    _validate_u64(limit, "limit")
    padded_end = ((limit >> 3) + 1) << 3
    base = _small_primes(isqrt(padded_end - 1))
    span = segment_bytes << 3
    for low in range(0, padded_end, span):
        high = min(low + span, padded_end)
        segment = kernels.sieve_segment(low, high, base)
        for offset in kernels.extract_primes(segment, 0, high - low - 1):
            p = low + offset
            if p > limit:
                return
            yield p


# Deterministic Miller-Rabin base tiers, each published as complete below
# its bound; the last covers all of 64 bits and beyond.
_MR_TIERS = (
    (3_215_031_751, (2, 3, 5, 7)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (U64_MAX + 1, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_SMALL_PRIME_DIVISORS = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _miller_rabin(n, bases):
    d = n - 1
    s = 0
    while d & 1 == 0:
        d >>= 1
        s += 1
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n, table=None):
    """Exact primality for any 64-bit unsigned n.

    Uses the given PrimeTable when n is within its range, otherwise the
    deterministic Miller-Rabin tiers.
    """
    _validate_u64(n, "n")
    if table is not None and n <= table.limit:
        return table.is_prime(n)
    if n < 2:
        return False
    for p in _SMALL_PRIME_DIVISORS:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    for bound, bases in _MR_TIERS:
        if n < bound:
            return _miller_rabin(n, bases)
    raise AssertionError("unreachable: tiers cover the 64-bit range")
