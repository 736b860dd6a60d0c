"""Extraction of admissible k-tuples from integer sets.

One residue class of minimum occupancy is removed per prime p <= k, in
increasing prime order. By pigeonhole each step drops at most |A|/p
elements, so a set with at least ceil(k * prod_{p<=k} p/(p-1)) elements
always retains k survivors, and every k-subset of the survivors is
admissible because for each p some residue class mod p ends up unoccupied.
"""

from bisect import bisect_left
from dataclasses import dataclass

from .errors import EmptySetError, ExtractionFailedError, InsufficientSetError, NotPrimeError
from .primes import U64_MAX, _validate_u64, is_prime
from .tuples import KTuple, _primes_leq

MODES = ("strict", "optimized")


@dataclass(frozen=True)
class IntegerSet:
    """Sorted tuple of distinct 64-bit unsigned integers."""

    elements: tuple

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        for g in elements:
            _validate_u64(g, "set element")
        for a, b in zip(elements, elements[1:]):
            if a >= b:
                raise ValueError(f"elements must be sorted and distinct, got {a} before {b}")

    @classmethod
    def from_iterable(cls, values):
        """Build from any iterable; duplicates collapse, order is ignored."""
        return cls(tuple(sorted(set(values))))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, value):
        i = bisect_left(self.elements, value)
        return i < len(self.elements) and self.elements[i] == value


@dataclass(frozen=True)
class RemovalStep:
    """One sieving step: the residue class b mod p removed from the set.

    skipped is True only in optimized mode, when some class mod p was
    already unoccupied and nothing had to be removed; b then names the
    smallest unoccupied residue.
    """

    p: int
    b: int
    removed: int
    remaining: int
    skipped: bool = False

    def to_json(self):
        return {
            "p": self.p,
            "b": self.b,
            "removed": self.removed,
            "remaining": self.remaining,
            "skipped": self.skipped,
        }


@dataclass(frozen=True)
class SieveTrace:
    """Ordered removal steps, one per prime p <= k, increasing in p."""

    steps: tuple

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_json(self):
        return [step.to_json() for step in self.steps]


@dataclass(frozen=True)
class ExtractionResult:
    survivors: IntegerSet
    trace: SieveTrace
    tuple: KTuple
    mode: str
    k: int

    def to_json(self):
        return {
            "mode": self.mode,
            "k": self.k,
            "steps": self.trace.to_json(),
            "survivors": list(self.survivors),
            "tuple": list(self.tuple),
        }


def required_cardinality(k):
    """Smallest r >= k * prod_{p<=k} p/(p-1), by exact integer arithmetic."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    num, den = k, 1
    for p in _primes_leq(k):
        num *= p
        den *= p - 1
    r = -(-num // den)
    if r > U64_MAX:
        raise OverflowError(f"required cardinality for k={k} exceeds 64 bits")
    return r


def _check_prime(p):
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")


def _residue_counts(a, p):
    counts = [0] * p
    for g in a:
        counts[g % p] += 1
    return counts


def min_count_residue(a, p):
    """A residue class mod p of minimum occupancy in a, ties to smallest b.

    The returned count never exceeds floor(|a| / p).
    """
    if len(a) == 0:
        raise EmptySetError("min_count_residue needs a nonempty set")
    _check_prime(p)
    counts = _residue_counts(a, p)
    count = min(counts)
    return counts.index(count), count


def refine_once(a, p, mode="strict"):
    """Remove one residue class mod p from a (or skip, in optimized mode).

    strict always removes the minimum-occupancy class, even when it is
    already empty; optimized skips the step whenever some class is
    unoccupied. Either way some residue class mod p is unoccupied in the
    result. Because the tie-break picks an empty class whenever one
    exists, both modes keep exactly the same elements.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if len(a) == 0:
        raise EmptySetError("refine_once needs a nonempty set")
    _check_prime(p)
    counts = _residue_counts(a, p)
    count = min(counts)
    b = counts.index(count)
    if mode == "optimized" and count == 0:
        return a, RemovalStep(p=p, b=b, removed=0, remaining=len(a), skipped=True)
    if count == 0:
        kept = a
    else:
        kept = IntegerSet(tuple(g for g in a if g % p != b))
    return kept, RemovalStep(p=p, b=b, removed=count, remaining=len(a) - count)


def extract_admissible_set(a, k, mode="strict", *, force=False):
    """Run the full removal procedure and select an admissible k-tuple.

    Requires |a| >= required_cardinality(k) unless force is set. The
    selected tuple is the k smallest survivors. When forcing leaves fewer
    than k survivors, raises ExtractionFailedError carrying the trace.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not isinstance(a, IntegerSet):
        a = IntegerSet.from_iterable(a)
    required = required_cardinality(k)
    if len(a) < required and not force:
        raise InsufficientSetError(len(a), required, k)
    if len(a) == 0:
        raise EmptySetError("cannot extract from an empty set")
    steps = []
    current = a
    for p in _primes_leq(k):
        current, step = refine_once(current, p, mode)
        steps.append(step)
    trace = SieveTrace(tuple(steps))
    if len(current) < k:
        raise ExtractionFailedError(
            f"only {len(current)} survivors remain, fewer than k={k}", trace
        )
    selected = KTuple(current.elements[:k])
    return ExtractionResult(survivors=current, trace=trace, tuple=selected, mode=mode, k=k)
