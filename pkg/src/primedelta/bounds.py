"""Exact Mertens-type products and minimal difference-set cardinalities.

threshold(C) = C * prod_{p<=C} p/(p-1) is computed in exact rational
arithmetic and r_min is its exact ceiling; floating point is never used to
derive an integer. For C large enough that the exact rational would blow a
digit budget, a rigorous fixed-point enclosure (directed rounding, guard
digits) stands in, and r_min is reported only when both ends of the
enclosure agree on the ceiling.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DigitBudgetError, PrecisionError
from .tuples import _primes_leq

DEFAULT_DIGIT_BUDGET = 100_000
DEFAULT_GUARD_DIGITS = 30


def _ceil(fr):
    return -(-fr.numerator // fr.denominator)


def render_decimal(fr, places=2):
    """Decimal string of a nonnegative rational, round half up."""
    if places < 0:
        raise ValueError("places must be >= 0")
    scaled = fr.numerator * 10**places
    q, r = divmod(scaled, fr.denominator)
    if 2 * r >= fr.denominator:
        q += 1
    if places == 0:
        return str(q)
    digits = str(q).rjust(places + 1, "0")
    return digits[:-places] + "." + digits[-places:]


def _estimated_digits(c):
    # conservative overestimate of len(str(primorial(c))): theta(c) < 1.000028*c,
    # so the numerator has under c/2 digits before reduction
    return c // 2 + 16


def mertens_product(c, *, digit_budget=DEFAULT_DIGIT_BUDGET):
    """Exact prod_{p<=c} p/(p-1) as a reduced Fraction (empty product = 1).

    Raises DigitBudgetError when the exact rational would exceed the digit
    budget; use delta_r_bound for an enclosure in that regime.
    """
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    if _estimated_digits(c) > digit_budget:
        raise DigitBudgetError(
            f"exact product for c={c} needs roughly {_estimated_digits(c)} digits, "
            f"over the budget of {digit_budget}"
        )
    product = Fraction(1)
    for p in _primes_leq(c):
        product *= Fraction(p, p - 1)
    return product


@dataclass(frozen=True)
class BoundReport:
    """threshold = c * prod_{p<=c} p/(p-1) and its exact ceiling r_min.

    When exact is False the product and threshold are rigorous lower and
    upper bounds that bracket the true values; r_min is still exact.
    """

    c: int
    primes: tuple
    product_low: Fraction
    product_high: Fraction
    threshold_low: Fraction
    threshold_high: Fraction
    r_min: int
    exact: bool

    @property
    def product(self):
        if not self.exact:
            raise PrecisionError("product is an enclosure, not an exact rational")
        return self.product_low

    @property
    def threshold(self):
        if not self.exact:
            raise PrecisionError("threshold is an enclosure, not an exact rational")
        return self.threshold_low

    def threshold_decimal(self, places=2):
        low = render_decimal(self.threshold_low, places)
        if self.exact:
            return low
        high = render_decimal(self.threshold_high, places)
        if low != high:
            raise PrecisionError(
                f"enclosure too loose to render {places} decimal places; "
                "raise guard_digits"
            )
        return low

    def to_json(self, places=2):
        return {
            "C": self.c,
            "r_min": self.r_min,
            "threshold_decimal": self.threshold_decimal(places),
            "product_num": str(self.product_low.numerator),
            "product_den": str(self.product_low.denominator),
            "primes": list(self.primes),
            "exact": self.exact,
        }


def delta_r_bound(c, *, digit_budget=DEFAULT_DIGIT_BUDGET,
                  guard_digits=DEFAULT_GUARD_DIGITS):
    """Full report for threshold(c), with r_min its exact integer ceiling."""
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    primes = _primes_leq(c)
    if _estimated_digits(c) <= digit_budget:
        product = Fraction(1)
        for p in primes:
            product *= Fraction(p, p - 1)
        threshold = c * product
        return BoundReport(
            c=c,
            primes=primes,
            product_low=product,
            product_high=product,
            threshold_low=threshold,
            threshold_high=threshold,
            r_min=_ceil(threshold),
            exact=True,
        )
    # fixed-point enclosure: scale by 10^guard_digits, round low down, high up
    scale = 10**guard_digits
    low = high = scale
    for p in primes:
        low = low * p // (p - 1)
        high = -(-high * p // (p - 1))
    product_low = Fraction(low, scale)
    product_high = Fraction(high, scale)
    threshold_low = c * product_low
    threshold_high = c * product_high
    r_low = _ceil(threshold_low)
    r_high = _ceil(threshold_high)
    if r_low != r_high:
        raise PrecisionError(
            f"enclosure for c={c} does not determine r_min "
            f"({r_low} vs {r_high}); raise guard_digits"
        )
    return BoundReport(
        c=c,
        primes=primes,
        product_low=product_low,
        product_high=product_high,
        threshold_low=threshold_low,
        threshold_high=threshold_high,
        r_min=r_low,
        exact=False,
    )
