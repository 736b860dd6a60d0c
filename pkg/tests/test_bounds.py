from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import trial_division_primes
from primedelta import (
    DigitBudgetError,
    PrecisionError,
    delta_r_bound,
    mertens_product,
    render_decimal,
)


def exact_product(c):
    product = Fraction(1)
    for p in trial_division_primes(c):
        product *= Fraction(p, p - 1)
    return product


def test_mertens_product_examples():
    assert mertens_product(1) == 1
    assert mertens_product(5) == Fraction(15, 4)
    assert mertens_product(50) == Fraction(11573306655157, 1605264998400)


@pytest.mark.parametrize("c", [1, 2, 3, 4, 5, 10, 47, 48, 105, 211, 400])
def test_mertens_product_matches_oracle(c):
    assert mertens_product(c) == exact_product(c)


def test_mertens_product_is_order_independent():
    forward = Fraction(1)
    backward = Fraction(1)
    ps = trial_division_primes(200)
    for p in ps:
        forward *= Fraction(p, p - 1)
    for p in reversed(ps):
        backward *= Fraction(p, p - 1)
    assert forward == backward == mertens_product(200)


def test_mertens_product_rejects_bad_c():
    with pytest.raises(ValueError):
        mertens_product(0)


def test_delta_r_bound_examples():
    assert delta_r_bound(2).r_min == 4  # 2 * 2 exactly
    report = delta_r_bound(5)
    assert report.r_min == 19
    assert report.threshold_decimal() == "18.75"
    assert delta_r_bound(105).r_min == -(
        -(105 * exact_product(105)).numerator // (105 * exact_product(105)).denominator
    )
    assert delta_r_bound(105).r_min == 891


def test_delta_r_bound_c50_exact_values():
    # exact evaluation of 50 * prod_{p<=50} p/(p-1); see the acceptance
    # suite for the conflicting published constant
    report = delta_r_bound(50)
    assert report.exact
    assert report.product == Fraction(11573306655157, 1605264998400)
    assert report.threshold == Fraction(11573306655157, 32105299968)
    assert report.r_min == 361
    assert report.threshold_decimal() == "360.48"
    assert report.threshold_decimal(4) == "360.4796"


def test_bound_report_json_schema():
    doc = delta_r_bound(5).to_json()
    assert doc == {
        "C": 5,
        "r_min": 19,
        "threshold_decimal": "18.75",
        "product_num": "15",
        "product_den": "4",
        "primes": [2, 3, 5],
        "exact": True,
    }


def test_r_min_is_nondecreasing_in_c():
    values = [delta_r_bound(c).r_min for c in range(1, 300)]
    assert all(a <= b for a, b in zip(values, values[1:]))


@given(st.integers(min_value=1, max_value=400))
def test_r_min_is_the_exact_ceiling(c):
    report = delta_r_bound(c)
    assert report.r_min - 1 < report.threshold <= report.r_min


def test_render_decimal_rounds_half_up():
    assert render_decimal(Fraction(1, 8), 2) == "0.13"
    assert render_decimal(Fraction(5, 2), 0) == "3"
    assert render_decimal(Fraction(4), 2) == "4.00"
    assert render_decimal(Fraction(720959, 1000), 2) == "720.96"
    assert render_decimal(Fraction(1, 3), 5) == "0.33333"
    with pytest.raises(ValueError):
        render_decimal(Fraction(1), -1)


def test_digit_budget_guards_exact_products():
    with pytest.raises(DigitBudgetError):
        mertens_product(100_000, digit_budget=100)


def test_enclosure_brackets_the_exact_value():
    exact = delta_r_bound(2000)
    assert exact.exact
    enclosed = delta_r_bound(2000, digit_budget=10)
    assert not enclosed.exact
    assert enclosed.threshold_low <= exact.threshold <= enclosed.threshold_high
    assert enclosed.r_min == exact.r_min
    assert enclosed.threshold_decimal() == exact.threshold_decimal()
    assert enclosed.to_json()["exact"] is False


def test_enclosure_refuses_to_guess():
    with pytest.raises(PrecisionError):
        delta_r_bound(2000, digit_budget=10, guard_digits=0)
    enclosed = delta_r_bound(2000, digit_budget=10)
    with pytest.raises(PrecisionError):
        _ = enclosed.product
    with pytest.raises(PrecisionError):
        _ = enclosed.threshold
