"""k-tuples of integers and admissibility testing.

A tuple H = {h_1 < ... < h_k} is admissible when, for every prime p, the
values n + h_i miss at least one residue class mod p; equivalently the
residues {-h_i mod p} never cover all of Z/p. Negation permutes Z/p, so
covering by {-h_i mod p} is the same as covering by {h_i mod p}, and the
checker works with the plain residues h_i mod p. Only primes p <= k can be
covered by k residues, so those are the only primes tested.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotPrimeError
from .primes import _small_primes, _validate_u64, is_prime


@lru_cache(maxsize=256)
def _primes_leq(n):
    return tuple(_small_primes(n))


@dataclass(frozen=True)
class KTuple:
    """Strictly increasing tuple of 64-bit unsigned integers, k >= 1."""

    elements: tuple

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise ValueError("a k-tuple needs at least one element")
        for h in elements:
            _validate_u64(h, "tuple element")
        for a, b in zip(elements, elements[1:]):
            if a >= b:
                raise ValueError(f"elements must be strictly increasing, got {a} before {b}")

    @classmethod
    def from_values(cls, values):
        """Build from any iterable; sorts, rejects duplicates by name."""
        values = list(values)
        seen = set()
        for v in values:
            if v in seen:
                raise ValueError(f"duplicate element {v}")
            seen.add(v)
        return cls(tuple(sorted(values)))

    @property
    def k(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Outcome of an admissibility test.

    obstruction is the smallest prime whose residue classes are all
    occupied, present exactly when the tuple is not admissible; it is
    always <= k.
    """

    admissible: bool
    obstruction: int | None = None

    def __bool__(self):
        return self.admissible

    def to_json(self):
        return {"admissible": self.admissible, "obstruction": self.obstruction}


def occupied_residues(tup, p):
    """The residues {h mod p : h in H} as a set.

    Occupying all p of them is equivalent to the n-values with
    prod(n + h_i) divisible by p covering Z/p (see module docstring).
    """
    if not isinstance(tup, KTuple):
        tup = KTuple.from_values(tup)
    _validate_u64(p, "p")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return {h % p for h in tup}


def is_admissible(tup):
    """Test admissibility; reports the smallest obstructing prime if any.

    Primes p > k never obstruct (k residues cannot fill p classes), so the
    scan stops at p <= k.
    """
    if not isinstance(tup, KTuple):
        tup = KTuple.from_values(tup)
    k = len(tup)
    for p in _primes_leq(k):
        seen = bytearray(p)
        missing = p
        for h in tup:
            r = h % p
            if not seen[r]:
                seen[r] = 1
                missing -= 1
                if missing == 0:
                    return AdmissibilityVerdict(False, obstruction=p)
    return AdmissibilityVerdict(True)
