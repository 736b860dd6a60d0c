"""Difference sets and prime-pair scans.

A scan result is finite evidence only: a listed pair (q, q+d) certifies
that d is a difference of two primes below the bound, never that it occurs
infinitely often. Odd d are allowed (any witness pair must then contain 2,
so there is at most one).
"""

from dataclasses import dataclass

from . import kernels
from .errors import EmptySetError
from .extraction import IntegerSet
from .primes import (
    DEFAULT_MEMORY_BUDGET,
    _validate_u64,
    is_prime,
    iter_primes,
    sieve_primes,
)

DEFAULT_PAIR_CAP = 1000


@dataclass(frozen=True)
class WitnessReport:
    """Prime pairs (q, q+d) with q+d <= scan_bound.

    pairs may be truncated at a cap; count is always the full total.
    """

    d: int
    scan_bound: int
    count: int
    pairs: tuple
    truncated: bool

    def to_json(self):
        return {
            "d": self.d,
            "N": self.scan_bound,
            "count": self.count,
            "pairs": [[q, q2] for q, q2 in self.pairs],
            "truncated": self.truncated,
        }


def difference_set(s):
    """All positive pairwise differences of s."""
    if not isinstance(s, IntegerSet):
        s = IntegerSet.from_iterable(s)
    elements = s.elements
    diffs = set()
    for i, a in enumerate(elements):
        for b in elements[i + 1 :]:
            diffs.add(b - a)
    return IntegerSet(tuple(sorted(diffs)))


def prime_pairs_with_difference(d, n, *, cap=DEFAULT_PAIR_CAP, table=None,
                                memory_budget=DEFAULT_MEMORY_BUDGET):
    """All prime pairs (q, q+d) with q+d <= n, ascending in q.

    Uses a full PrimeTable when n fits the memory budget, otherwise a
    segmented enumeration of q with a direct primality test on q+d; the
    two paths give identical reports.
    """
    _validate_u64(d, "d")
    _validate_u64(n, "n")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if n < 2:
        raise ValueError(f"scan bound must be >= 2, got {n}")
    if cap < 0:
        raise ValueError("cap must be >= 0")
    if table is None and (n >> 3) + 1 <= memory_budget:
        table = sieve_primes(n, memory_budget=memory_budget)
    if table is not None:
        if n > table.limit:
            raise ValueError(f"scan bound {n} is beyond the table limit {table.limit}")
        count, qs = kernels.pair_scan(table.bits, d, n, cap)
        pairs = tuple((q, q + d) for q in qs)
    else:
        count = 0
        listed = []
        for q in iter_primes(n - d) if n - d >= 2 else ():
            if is_prime(q + d):
                count += 1
                if len(listed) < cap:
                    listed.append((q, q + d))
        pairs = tuple(listed)
    return WitnessReport(
        d=d, scan_bound=n, count=count, pairs=pairs, truncated=count > len(pairs)
    )


def realized_differences(n, max_d, *, table=None):
    """Differences d <= max_d realized by some prime pair below n."""
    _validate_u64(n, "n")
    _validate_u64(max_d, "max_d")
    if n < 2:
        raise ValueError(f"scan bound must be >= 2, got {n}")
    if max_d < 1:
        raise ValueError(f"max_d must be >= 1, got {max_d}")
    if table is None:
        table = sieve_primes(n)
    realized = []
    for d in range(1, max_d + 1):
        count, _ = kernels.pair_scan(table.bits, d, n, 0)
        if count:
            realized.append(d)
    return IntegerSet(tuple(realized))


def max_gap(s, range_end):
    """Largest gap between consecutive elements of s united with {0},
    including the tail gap up to range_end."""
    if not isinstance(s, IntegerSet):
        s = IntegerSet.from_iterable(s)
    if len(s) == 0:
        raise EmptySetError("max_gap needs a nonempty set")
    _validate_u64(range_end, "range_end")
    if s.elements[-1] > range_end:
        raise ValueError(
            f"set reaches {s.elements[-1]}, beyond range_end={range_end}"
        )
    widest = 0
    previous = 0
    for g in s:
        if g - previous > widest:
            widest = g - previous
        previous = g
    return max(widest, range_end - previous)
