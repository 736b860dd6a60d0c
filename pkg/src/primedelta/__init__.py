"""Admissible prime k-tuples, residue-class extraction, exact
Mertens-product bounds, and prime-difference scans."""

from .bounds import BoundReport, delta_r_bound, mertens_product, render_decimal
from .diffsets import (
    WitnessReport,
    difference_set,
    max_gap,
    prime_pairs_with_difference,
    realized_differences,
)
from .errors import (
    DigitBudgetError,
    EmptySetError,
    ExtractionFailedError,
    InputFormatError,
    InsufficientSetError,
    MemoryBudgetError,
    NotPrimeError,
    NoWitnessError,
    PrecisionError,
    PrimeDeltaError,
)
from .extraction import (
    ExtractionResult,
    IntegerSet,
    RemovalStep,
    SieveTrace,
    extract_admissible_set,
    min_count_residue,
    refine_once,
    required_cardinality,
)
from .kernels import BACKEND
from .primes import PrimeTable, is_prime, iter_primes, primes_up_to, sieve_primes
from .tuples import AdmissibilityVerdict, KTuple, is_admissible, occupied_residues
from .witness import DeltaDemoReport, TupleScanHit, delta_r_star_demo, scan_tuple_witnesses

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityVerdict",
    "BACKEND",
    "BoundReport",
    "DeltaDemoReport",
    "DigitBudgetError",
    "EmptySetError",
    "ExtractionFailedError",
    "ExtractionResult",
    "InputFormatError",
    "InsufficientSetError",
    "IntegerSet",
    "KTuple",
    "MemoryBudgetError",
    "NotPrimeError",
    "NoWitnessError",
    "PrecisionError",
    "PrimeDeltaError",
    "PrimeTable",
    "RemovalStep",
    "SieveTrace",
    "TupleScanHit",
    "WitnessReport",
    "delta_r_bound",
    "delta_r_star_demo",
    "difference_set",
    "extract_admissible_set",
    "is_admissible",
    "is_prime",
    "iter_primes",
    "max_gap",
    "mertens_product",
    "min_count_residue",
    "occupied_residues",
    "prime_pairs_with_difference",
    "primes_up_to",
    "realized_differences",
    "refine_once",
    "render_decimal",
    "required_cardinality",
    "scan_tuple_witnesses",
    "sieve_primes",
    "__version__",
]
