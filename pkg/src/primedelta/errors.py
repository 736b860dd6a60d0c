"""Exception hierarchy with stable machine-readable codes.

Every error the CLI can surface carries a ``code`` string that is stable
across releases; scripts should key on codes, not messages.
"""


class PrimeDeltaError(Exception):
    code = "error"


class MemoryBudgetError(PrimeDeltaError):
    """A sieve or scan would exceed the configured memory budget."""

    code = "memory-budget"


class DigitBudgetError(PrimeDeltaError):
    """An exact rational would exceed the configured digit budget."""

    code = "digit-budget"


class PrecisionError(PrimeDeltaError):
    """An enclosure is too loose to determine the requested integer."""

    code = "indeterminate-precision"


class NotPrimeError(PrimeDeltaError):
    code = "not-prime"


class EmptySetError(PrimeDeltaError):
    code = "empty-set"


class InputFormatError(PrimeDeltaError):
    """Malformed integer-set or tuple text input."""

    code = "bad-input"


class InsufficientSetError(PrimeDeltaError):
    """Input set is smaller than the guaranteed-sufficient cardinality."""

    code = "insufficient-cardinality"

    def __init__(self, size, required, k):
        super().__init__(
            f"set has {size} elements but {required} are required to "
            f"guarantee an admissible {k}-tuple (pass force=True to try anyway)"
        )
        self.size = size
        self.required = required
        self.k = k


class ExtractionFailedError(PrimeDeltaError):
    """Forced extraction left fewer than k survivors; carries the trace."""

    code = "extraction-failed"

    def __init__(self, message, trace):
        super().__init__(message)
        self.trace = trace


class NoWitnessError(PrimeDeltaError):
    """No scan hit below the bound; carries the extracted tuple.

    This is a failed evidence search, not a refutation.
    """

    code = "no-witness"

    def __init__(self, message, tuple_):
        super().__init__(message)
        self.tuple = tuple_
