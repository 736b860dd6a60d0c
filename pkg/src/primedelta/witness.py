"""Tuple witness scans and the end-to-end difference demo.

scan_tuple_witnesses looks for integers n where at least two of n + h_i
are prime; delta_r_star_demo extracts an admissible C-tuple from a user
set, finds the first such n, and reports the resulting prime pair, whose
difference necessarily lies in the difference set of the input. Found
witnesses are finite evidence below the scan bound, nothing more.
"""

from dataclasses import dataclass

from .errors import NoWitnessError
from .extraction import IntegerSet, extract_admissible_set
from .primes import DEFAULT_MEMORY_BUDGET, _validate_u64, is_prime, sieve_primes
from .tuples import KTuple


@dataclass(frozen=True)
class TupleScanHit:
    """An n with at least two of n + h_i prime.

    prime_offsets lists every index i with n + h_i prime; primes holds the
    corresponding values, ascending.
    """

    n: int
    prime_offsets: tuple
    primes: tuple

    def to_json(self):
        return {
            "n": self.n,
            "offsets": list(self.prime_offsets),
            "primes": list(self.primes),
        }


@dataclass(frozen=True)
class DeltaDemoReport:
    input_size: int
    k: int
    tuple: KTuple
    hit: TupleScanHit
    realized_difference: int
    witness_pair: tuple

    def to_json(self):
        return {
            "input_size": self.input_size,
            "k": self.k,
            "tuple": list(self.tuple),
            "hit": self.hit.to_json(),
            "realized_difference": self.realized_difference,
            "witness_pair": list(self.witness_pair),
        }


def scan_tuple_witnesses(tup, n_max, min_hits=1, *, table=None,
                         memory_budget=DEFAULT_MEMORY_BUDGET):
    """Hits with 0 <= n <= n_max, ascending, stopping after min_hits hits.

    Admissibility is not required; an inadmissible tuple simply tends to
    run out of hits. An empty result means only that no witness exists
    below the bound.
    """
    if not isinstance(tup, KTuple):
        tup = KTuple.from_values(tup)
    _validate_u64(n_max, "n_max")
    if min_hits < 1:
        raise ValueError(f"min_hits must be >= 1, got {min_hits}")
    top = n_max + tup.elements[-1]
    if table is None and (top >> 3) + 1 <= memory_budget:
        table = sieve_primes(top, memory_budget=memory_budget)
    if table is not None and top <= table.limit:
        probe = table.is_prime
    else:
        probe = is_prime
    offsets = tup.elements
    hits = []
    for n in range(n_max + 1):
        found = [i for i, h in enumerate(offsets) if probe(n + h)]
        if len(found) >= 2:
            hits.append(
                TupleScanHit(
                    n=n,
                    prime_offsets=tuple(found),
                    primes=tuple(n + offsets[i] for i in found),
                )
            )
            if len(hits) >= min_hits:
                break
    return hits


def delta_r_star_demo(s, c, n_max, *, mode="strict"):
    """Extract a c-tuple from s, witness it, and realize a difference of s.

    The reported difference comes from the two smallest primes of the first
    hit and is verified to be a member of difference_set(s). Raises
    NoWitnessError (carrying the extracted tuple) when no hit exists below
    n_max; that is a failed search, not a refutation.
    """
    if not isinstance(s, IntegerSet):
        s = IntegerSet.from_iterable(s)
    result = extract_admissible_set(s, c, mode)
    hits = scan_tuple_witnesses(result.tuple, n_max, min_hits=1)
    if not hits:
        raise NoWitnessError(
            f"no n <= {n_max} makes two of the tuple offsets prime", result.tuple
        )
    hit = hits[0]
    q, q2 = hit.primes[0], hit.primes[1]
    realized = q2 - q
    # membership in the difference set == some pair of s realizes the gap
    if not any(a + realized in s for a in s):
        raise AssertionError(
            f"internal invariant violated: {realized} not a difference of the input"
        )
    return DeltaDemoReport(
        input_size=len(s),
        k=c,
        tuple=result.tuple,
        hit=hit,
        realized_difference=realized,
        witness_pair=(q, q2),
    )
